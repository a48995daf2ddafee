#include "apolar/ring.hpp"

#include <algorithm>

namespace apolar {

std::vector<Expo> monomials_of_degree(int nvars, int d) {
    std::vector<Expo> out;
    if (d < 0) return out;
    Expo cur = expo_zero();
    // Recursive enumeration, then one deterministic sort.
    struct Rec {
        int nvars;
        std::vector<Expo>& out;
        Expo& cur;
        void go(int var, int remaining) {
            if (var == nvars - 1) {
                cur[var] = static_cast<uint8_t>(remaining);
                out.push_back(cur);
                cur[var] = 0;
                return;
            }
            for (int e = remaining; e >= 0; --e) {
                cur[var] = static_cast<uint8_t>(e);
                go(var + 1, remaining - e);
            }
            cur[var] = 0;
        }
    } rec{nvars, out, cur};
    if (nvars == 0) {
        if (d == 0) out.push_back(expo_zero());
        return out;
    }
    rec.go(0, d);
    std::sort(out.begin(), out.end(), [nvars](const Expo& a, const Expo& b) {
        return grevlex_cmp(a, b, nvars) > 0;
    });
    return out;
}

}  // namespace apolar
