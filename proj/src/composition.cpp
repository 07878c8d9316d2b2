#include "subring/composition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace subring {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty())
        throw std::invalid_argument("composition must have at least one part");
    for (int x : parts)
        if (x < 1)
            throw std::invalid_argument("composition parts must be positive");
}

int Composition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Composition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

static void gen(int e, int parts, std::vector<int>& cur, std::vector<Composition>& out) {
    if (parts == 1) {
        if (e >= 1) {
            cur.push_back(e);
            out.emplace_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first <= e - (parts - 1); ++first) {
        cur.push_back(first);
        gen(e - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Composition> compositions(int e, int parts) {
    if (parts < 1)
        throw std::invalid_argument("compositions: parts must be >= 1");
    std::vector<Composition> out;
    if (e < parts)
        return out;
    std::vector<int> cur;
    gen(e, parts, cur, out);
    return out;
}

std::vector<Composition> compositions_first_gt1(int e, int parts) {
    std::vector<Composition> out;
    for (auto& c : compositions(e, parts))
        if (c.parts.front() > 1)
            out.push_back(std::move(c));
    return out;
}

Composition parse_composition(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("bad composition part: '" + tok + "'");
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

} // namespace subring
