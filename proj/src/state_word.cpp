#include "sepsys/state_word.hpp"

namespace sepsys {

StateWord StateWord::parse(const std::string& text) {
    if (text.empty() || text.size() > 63)
        throw ParseError("state word '" + text + "' has unsupported length");
    StateWord w(static_cast<int>(text.size()), 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            w.mask |= 1ull << (w.n - 1 - static_cast<int>(i));
        else if (text[i] != '0')
            throw ParseError("state word '" + text + "' contains non-binary digit");
    }
    return w;
}

std::string StateWord::str() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

bool is_antichain(const std::vector<StateWord>& words) {
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (words[i].comparable(words[j])) return false;
    return true;
}

} // namespace sepsys
