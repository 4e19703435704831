/**
 * @file invariants.cpp
 * @brief Parsing and derived constants for Seifert invariant lists.
 */
#include "seifert/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace seifert {

std::string to_string(SeifertType t) {
    switch (t) {
        case SeifertType::O1: return "o1";
        case SeifertType::O2: return "o2";
        case SeifertType::N1: return "n1";
        case SeifertType::N2: return "n2";
        case SeifertType::N3: return "n3";
        case SeifertType::N4: return "n4";
    }
    return "?";
}

std::string to_string(CaseId c) {
    return "Case" + std::to_string(static_cast<int>(c));
}

SeifertType parse_type(std::string_view s) {
    std::string low(s);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (low == "o1") return SeifertType::O1;
    if (low == "o2") return SeifertType::O2;
    if (low == "n1") return SeifertType::N1;
    if (low == "n2") return SeifertType::N2;
    if (low == "n3") return SeifertType::N3;
    if (low == "n4") return SeifertType::N4;
    throw InputError("unknown type '" + std::string(s) + "'");
}

int minimal_genus(SeifertType t) {
    switch (t) {
        case SeifertType::O1: return 0;
        case SeifertType::O2:
        case SeifertType::N1:
        case SeifertType::N2: return 1;
        case SeifertType::N3: return 2;
        case SeifertType::N4: return 3;
    }
    return 0;
}

SeifertInvariants SeifertInvariants::make(std::int64_t e, SeifertType type, int g,
                                          const std::vector<Fiber>& exceptional) {
    if (g < 0) throw InputError("genus must be non-negative");
    if (g < minimal_genus(type)) {
        throw InputError("type " + to_string(type) + " requires g >= " +
                         std::to_string(minimal_genus(type)));
    }
    SeifertInvariants inv;
    inv.e = e;
    inv.type = type;
    inv.g = g;
    inv.fibers.reserve(exceptional.size() + 1);
    inv.fibers.push_back({1, e});
    for (const Fiber& f : exceptional) {
        if (f.a == 0) throw InputError("fiber multiplicity a_k must be nonzero");
        if (std::gcd(f.a, f.b) != 1) {
            throw InputError("fiber (" + std::to_string(f.a) + "," + std::to_string(f.b) +
                             ") is not coprime");
        }
        inv.fibers.push_back(f);
    }
    return inv;
}

int SeifertInvariants::eps(int j) const {
    switch (type) {
        case SeifertType::O1:
        case SeifertType::N1: return 1;
        case SeifertType::O2:
        case SeifertType::N2: return -1;
        case SeifertType::N3: return j == 1 ? 1 : -1;
        case SeifertType::N4: return j <= 2 ? 1 : -1;
    }
    return 1;
}

std::vector<int> SeifertInvariants::eps_signs() const {
    std::vector<int> out;
    for (int j = 1; j <= gp(); ++j) out.push_back(eps(j));
    return out;
}

std::string SeifertInvariants::to_text() const {
    std::ostringstream os;
    os << "e=" << e << ";type=" << to_string(type) << ";g=" << g;
    if (fibers.size() > 1) {
        os << ";fibers=";
        for (std::size_t k = 1; k < fibers.size(); ++k) {
            if (k > 1) os << ',';
            os << '(' << fibers[k].a << ',' << fibers[k].b << ')';
        }
    }
    return os.str();
}

namespace {

std::int64_t parse_int(std::string_view s, const char* what) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw InputError(std::string("malformed integer for ") + what + ": '" +
                         std::string(s) + "'");
    }
    return v;
}

std::vector<Fiber> parse_fibers(std::string_view s) {
    std::vector<Fiber> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw InputError("expected '(' in fiber list");
        std::size_t close = s.find(')', i);
        if (close == std::string_view::npos) throw InputError("unterminated fiber pair");
        std::string_view inner = s.substr(i + 1, close - i - 1);
        std::size_t comma = inner.find(',');
        if (comma == std::string_view::npos) throw InputError("fiber pair needs two entries");
        out.push_back({parse_int(inner.substr(0, comma), "a_k"),
                       parse_int(inner.substr(comma + 1), "b_k")});
        i = close + 1;
        if (i < s.size()) {
            if (s[i] != ',') throw InputError("expected ',' between fiber pairs");
            ++i;
            if (i == s.size()) throw InputError("trailing ',' in fiber list");
        }
    }
    return out;
}

}  // namespace

SeifertInvariants parse(std::string_view text) {
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    }
    bool have_e = false, have_type = false, have_g = false;
    std::int64_t e = 0;
    std::int64_t g = 0;
    SeifertType type = SeifertType::O1;
    std::vector<Fiber> fibers;

    std::string_view rest(compact);
    while (!rest.empty()) {
        std::size_t semi = rest.find(';');
        std::string_view field = rest.substr(0, semi);
        rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
        if (field.empty()) continue;
        std::size_t eq = field.find('=');
        if (eq == std::string_view::npos) {
            throw InputError("field '" + std::string(field) + "' lacks '='");
        }
        std::string key(field.substr(0, eq));
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        std::string_view value = field.substr(eq + 1);
        if (key == "e") {
            e = parse_int(value, "e");
            have_e = true;
        } else if (key == "type") {
            type = parse_type(value);
            have_type = true;
        } else if (key == "g") {
            g = parse_int(value, "g");
            if (g < 0 || g > 1000) throw InputError("genus out of range");
            have_g = true;
        } else if (key == "fibers") {
            fibers = parse_fibers(value);
        } else {
            throw InputError("unknown field '" + key + "'");
        }
    }
    if (!have_e || !have_type || !have_g) {
        throw InputError("invariants need e, type and g");
    }
    return SeifertInvariants::make(e, type, static_cast<int>(g), fibers);
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

int valuation(std::int64_t x, std::uint32_t p) {
    if (x == 0) return 0;
    int v = 0;
    while (x % static_cast<std::int64_t>(p) == 0) {
        x /= static_cast<std::int64_t>(p);
        ++v;
    }
    return v;
}

DerivedConstants derive(const SeifertInvariants& inv, std::uint32_t p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    DerivedConstants d;
    d.p = p;
    d.a = 1;
    for (const Fiber& f : inv.fibers) d.a = std::lcm(d.a, f.a < 0 ? -f.a : f.a);
    d.c = 0;
    for (const Fiber& f : inv.fibers) d.c += f.b * (d.a / f.a);
    const auto pp = static_cast<std::int64_t>(p);
    for (const Fiber& f : inv.fibers) {
        if (f.a % pp == 0) ++d.n;
        if (f.b % pp == 0) ++d.r;
    }
    d.gp = inv.gp();
    d.star = inv.star();
    if (d.n > 0) {
        d.case_id = CaseId::Case3;
    } else {
        d.case_id = (d.c % pp == 0) ? CaseId::Case1 : CaseId::Case2;
    }
    d.eps_signs = inv.eps_signs();

    d.fiber_order.resize(inv.fibers.size());
    std::iota(d.fiber_order.begin(), d.fiber_order.end(), 0);
    if (d.n > 0) {
        auto key = [&](int k) {
            const std::int64_t a = inv.fibers[static_cast<std::size_t>(k)].a;
            return a % pp == 0 ? valuation(a, p) : -1;
        };
        std::stable_sort(d.fiber_order.begin(), d.fiber_order.end(),
                         [&](int x, int y) { return key(x) > key(y); });
    }
    return d;
}

SeifertInvariants reordered(const SeifertInvariants& inv, const std::vector<int>& order) {
    SeifertInvariants out = inv;
    for (std::size_t k = 0; k < order.size(); ++k) {
        out.fibers[k] = inv.fibers[static_cast<std::size_t>(order[k])];
    }
    return out;
}

std::string presentation_pi1(const SeifertInvariants& inv) {
    std::ostringstream os;
    const int m = inv.m();
    const int gp = inv.gp();
    os << "generators: ";
    for (int k = 0; k <= m; ++k) os << "q_" << k << ' ';
    for (int j = 1; j <= gp; ++j) os << "v" << j << ' ';
    os << "h\nrelations:\n";
    for (int k = 0; k <= m; ++k) {
        const Fiber& f = inv.fibers[static_cast<std::size_t>(k)];
        os << "  [q_" << k << ",h]\n";
        os << "  q_" << k << '^' << f.a << " h^" << f.b << '\n';
    }
    for (int j = 1; j <= gp; ++j) {
        os << "  v" << j << " h v" << j << "^-1 h^" << -inv.eps(j) << '\n';
    }
    std::string v;
    if (is_orientable_base(inv.type)) {
        for (int i = 1; i < gp; i += 2) {
            if (!v.empty()) v += ' ';
            v += "[v" + std::to_string(i) + ",v" + std::to_string(i + 1) + "]";
        }
    } else {
        for (int j = 1; j <= gp; ++j) {
            if (!v.empty()) v += ' ';
            v += "v" + std::to_string(j) + "^2";
        }
    }
    os << "  ";
    for (int k = 0; k <= m; ++k) os << "q_" << k << ' ';
    os << "V\n";
    os << "V = " << (v.empty() ? "1" : v) << '\n';
    return os.str();
}

}  // namespace seifert
