#include "apolar/parse.hpp"

#include <algorithm>
#include <set>

namespace apolar {

std::vector<std::string> collect_variables(const std::string& text) {
    std::set<std::string> seen;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            std::string ident = text.substr(start, i - start);
            for (auto& ch : ident)
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            seen.insert(ident);
        } else {
            ++i;
        }
    }
    std::vector<std::string> vars(seen.begin(), seen.end());
    auto split = [](const std::string& s) {
        size_t k = s.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
        long long num = -1;
        if (k < s.size()) num = std::stoll(s.substr(k));
        return std::make_pair(s.substr(0, k), num);
    };
    std::sort(vars.begin(), vars.end(), [&](const std::string& a, const std::string& b) {
        auto [sa, na] = split(a);
        auto [sb, nb] = split(b);
        if (sa != sb) return sa < sb;
        return na < nb;
    });
    return vars;
}

}  // namespace apolar
