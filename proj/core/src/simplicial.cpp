/**
 * @file simplicial.cpp
 * @brief Construction of the Delta-complex, face by face.
 */
#include "seifert/simplicial.hpp"

#include <sstream>
#include <stdexcept>

namespace seifert {

std::size_t DeltaComplex::vertex(int d, std::size_t i, int pos) const {
    while (d > 0) {
        const auto& f = face_list(d, i);
        if (pos < d) {
            i = f[static_cast<std::size_t>(d)];
        } else {
            i = f[0];
            pos -= 1;
        }
        --d;
    }
    return i;
}

std::size_t DeltaComplex::front_face(int d, std::size_t i, int k) const {
    while (d > k) {
        i = face_list(d, i)[static_cast<std::size_t>(d)];
        --d;
    }
    return i;
}

std::size_t DeltaComplex::back_face(int d, std::size_t i, int k) const {
    while (d > k) {
        i = face_list(d, i)[0];
        --d;
    }
    return i;
}

SimplicialCochain DeltaComplex::hat(int d, const std::string& label, std::uint32_t p) const {
    SimplicialCochain c(d, count(d), p);
    c.add(index(d, label), 1);
    return c;
}

long DeltaComplex::euler_characteristic() const {
    return static_cast<long>(count(0)) - static_cast<long>(count(1)) +
           static_cast<long>(count(2)) - static_cast<long>(count(3));
}

void require_constructible(const SeifertInvariants& inv) {
    for (const Fiber& f : inv.fibers) {
        if (f.a < 1 || (f.b <= 0 && f.a != 1)) {
            throw InputError("the simplicial construction needs a_k >= 1 and b_k > 0 unless a_k = 1; got (" +
                             std::to_string(f.a) + "," + std::to_string(f.b) + ")");
        }
    }
}

namespace {

class Builder {
public:
    explicit Builder(DeltaComplex& cx) : cx_(cx) {}

    void add(int dim, const std::string& label, const std::vector<std::string>& face_labels = {}) {
        if (static_cast<int>(face_labels.size()) != (dim == 0 ? 0 : dim + 1)) {
            throw std::logic_error("wrong face count for " + label);
        }
        std::vector<std::size_t> f;
        f.reserve(face_labels.size());
        for (const auto& fl : face_labels) f.push_back(cx_.simplices.index(dim - 1, fl));
        cx_.simplices.add(dim, label);
        cx_.faces[static_cast<std::size_t>(dim)].push_back(std::move(f));
    }

private:
    DeltaComplex& cx_;
};

std::string pm(const std::string& family, char sign) { return family + std::string(1, sign); }

/// Per-index data of the boundary polygon of delta: letter, diagonal and
/// the two e-indices appearing as faces s_1, s_2 of delta_l.
struct PolygonSide {
    std::string letter;
    std::string diagonal;
    long s1 = 0;
    long s2 = 0;
};

std::vector<PolygonSide> polygon(const SeifertInvariants& inv) {
    const long star = inv.star();
    const long m = inv.m();
    const long L = star + m + 1;
    std::vector<PolygonSide> out(static_cast<std::size_t>(L));
    for (long l = 0; l < L; ++l) {
        PolygonSide& s = out[static_cast<std::size_t>(l)];
        const long next = (l + 1) % L;
        if (l >= star) {
            s.letter = lbl("q", l - star);
            s.diagonal = lbl("g", l - star);
            s.s1 = next;
            s.s2 = l;
        } else if (is_orientable_base(inv.type)) {
            const long block = l / 4, r = l % 4;
            const long j = (r == 0 || r == 2) ? 2 * block + 1 : 2 * block + 2;
            s.letter = lbl("t", j);
            s.diagonal = lbl("f", j);
            if (r <= 1) {
                s.s1 = next;
                s.s2 = l;
            } else {
                s.s1 = l;
                s.s2 = next;
            }
        } else {
            const long j = l / 2 + 1;
            s.letter = lbl("t", j);
            s.diagonal = lbl("f", j);
            s.s1 = next;
            s.s2 = l;
        }
    }
    return out;
}

/// Signs (first, second) of the S-faces of F_l.
std::pair<char, char> f_signs(const SeifertInvariants& inv, long l) {
    const long star = inv.star();
    if (l >= star) return {'+', '-'};
    switch (inv.type) {
        case SeifertType::O1: return {'+', '-'};
        case SeifertType::O2: {
            const long r = l % 4;
            return (r == 1 || r == 2) ? std::pair{'-', '+'} : std::pair{'+', '-'};
        }
        default: {
            const int j = static_cast<int>(l / 2 + 1);
            if (inv.eps(j) == -1 && l % 2 == 1) return {'-', '+'};
            return {'+', '-'};
        }
    }
}

bool h_flipped(const SeifertInvariants& inv, long l) {
    if (l >= inv.star() || l % 2 == 0) return false;
    return inv.eps(static_cast<int>((l + 1) / 2)) == -1;
}

void build_fiber(Builder& B, const SeifertInvariants& inv, const PavementWord& W, long k) {
    const Fiber& fib = inv.fibers[static_cast<std::size_t>(k)];
    const long z = W.z;
    const std::string q = lbl("q", k), g = lbl("g", k);
    const std::string ck = lbl("c", k), dk = lbl("d", k);
    auto P = [&](long l) { return lbl("p", k, l); };
    auto S = [&](long l) { return lbl("Sk", k, l); };
    auto mu = [&](long l) { return lbl("mu", k, l); };
    auto X = [&](long l) { return lbl("X", k, l); };
    auto Pp = [&](long l) { return lbl("P+", k, l); };
    auto Pm = [&](long l) { return lbl("P-", k, l); };
    const std::string Q = lbl("Q", k), Hp = lbl("H'", k), G = lbl("G", k);
    const std::string Cp = lbl("C+", k), Cm = lbl("C-", k);
    // cyclic successor on 1..z
    auto nx = [&](long i) { return i == z ? 1 : i + 1; };

    // 1-simplexes and 0-simplexes of mu_k and zeta_k
    for (long l = 1; l <= z; ++l) B.add(1, P(l), {"sigma", ck});
    B.add(1, Cp, {ck, dk});
    B.add(1, Cm, {ck, dk});
    for (long l = 0; l <= z; ++l) B.add(1, S(l), {"sigma", dk});

    if (fib.b > 0) {
        auto letter = [&](long i) { return W.x(i) == 'Q' ? q : std::string("h"); };
        for (long i = 1; i <= z; ++i) B.add(2, mu(i), {letter(i), P(nx(i)), P(i)});
        for (long i = 1; i <= z; ++i) B.add(2, X(i), {letter(i), S(nx(i)), S(i)});
        B.add(2, Q, {q, S(0), S(z)});
        B.add(2, Hp, {"h", S(2), S(0)});
        B.add(2, G, {g, S(2), S(z)});
        for (long i = 1; i <= z; ++i) B.add(2, Pm(i), {P(i), S(i), Cm});
        const long w = W.w;
        auto sigma = [&](long i) {
            if (i <= z - w + 1) return w + i - 1;
            if (i == z - w + 2) return 0L;
            return i - z + w - 1;
        };
        for (long i = 1; i <= z; ++i) B.add(2, Pp(i), {P(i), S(sigma(i)), Cp});
        for (long i = 1; i <= z; ++i) B.add(3, lbl("M-", k, i), {mu(i), X(i), Pm(nx(i)), Pm(i)});
        for (long i = 1; i <= z; ++i) {
            std::string Y;
            if (i <= z - w) {
                Y = X(w + i - 1);
            } else if (i == z - w + 1) {
                Y = Q;
            } else if (i == z - w + 2) {
                Y = Hp;
            } else {
                Y = X(i - z + w - 1);
            }
            B.add(3, lbl("M+", k, i), {mu(i), Y, Pp(nx(i)), Pp(i)});
        }
        B.add(3, lbl("R'1", k), {lbl("rho1", k), Hp, G, Q});
        B.add(3, lbl("R'2", k), {lbl("rho2", k), X(1), G, X(z)});
    } else if (fib.b < 0) {
        B.add(2, mu(1), {q, P(2), P(1)});
        for (long l = 2; l <= z; ++l) B.add(2, mu(l), {"h", P(l), P(nx(l))});
        B.add(2, X(1), {q, S(2), S(1)});
        for (long l = 2; l <= z; ++l) B.add(2, X(l), {"h", S(l), S(nx(l))});
        B.add(2, Q, {q, S(z >= 3 ? 3 : 1), S(0)});
        B.add(2, Hp, {"h", S(1), S(0)});
        B.add(2, G, {g, S(2), S(0)});
        for (long l = 1; l <= z; ++l) B.add(2, Pm(l), {P(l), S(l), Cm});
        B.add(2, Pp(1), {P(1), S(0), Cp});
        for (long l = 2; l <= z; ++l) B.add(2, Pp(l), {P(l), S(nx(l)), Cp});
        B.add(3, lbl("M-", k, 1), {mu(1), X(1), Pm(2), Pm(1)});
        for (long l = 2; l <= z; ++l) B.add(3, lbl("M-", k, l), {mu(l), X(l), Pm(l), Pm(nx(l))});
        B.add(3, lbl("M+", k, 1), {mu(1), Q, Pp(2), Pp(1)});
        for (long l = 2; l < z; ++l) B.add(3, lbl("M+", k, l), {mu(l), X(l + 1), Pp(l), Pp(l + 1)});
        B.add(3, lbl("M+", k, z), {mu(z), Hp, Pp(z), Pp(1)});
        B.add(3, lbl("R'1", k), {lbl("rho1", k), X(2), G, Q});
        B.add(3, lbl("R'2", k), {lbl("rho2", k), X(1), G, Hp});
    } else {
        B.add(2, mu(1), {q, P(1), P(1)});
        B.add(2, X(1), {q, S(1), S(1)});
        B.add(2, Q, {q, S(0), S(0)});
        B.add(2, Hp, {"h", S(1), S(0)});
        B.add(2, G, {g, S(1), S(0)});
        B.add(2, Pm(1), {P(1), S(1), Cm});
        B.add(2, Pp(1), {P(1), S(0), Cp});
        B.add(3, lbl("M-", k, 1), {mu(1), X(1), Pm(1), Pm(1)});
        B.add(3, lbl("M+", k, 1), {mu(1), Q, Pp(1), Pp(1)});
        B.add(3, lbl("R'1", k), {lbl("rho1", k), Hp, G, Q});
        B.add(3, lbl("R'2", k), {lbl("rho2", k), X(1), G, Hp});
    }
}

void build_boundaries(DeltaComplex& cx) {
    for (int d = 1; d <= 3; ++d) {
        SparseIntMatrix m(cx.count(d - 1), cx.count(d));
        for (std::size_t i = 0; i < cx.count(d); ++i) {
            const auto& f = cx.face_list(d, i);
            for (std::size_t s = 0; s < f.size(); ++s) m.add(f[s], i, (s % 2 == 0) ? 1 : -1);
        }
        cx.boundary[static_cast<std::size_t>(d - 1)] = std::move(m);
    }
}

}  // namespace

DeltaComplex build_delta_complex(const SeifertInvariants& inv) {
    require_constructible(inv);
    DeltaComplex cx;
    cx.inv = inv;
    for (const Fiber& f : inv.fibers) cx.words.push_back(build_word(f.a, f.b));

    Builder B(cx);
    const long m = inv.m();
    const long gp = inv.gp();
    const long star = inv.star();
    const long L = star + m + 1;
    auto wrap = [&](long l) { return ((l % L) + L) % L; };
    const std::vector<PolygonSide> side = polygon(inv);

    // 0-simplexes
    B.add(0, "sigma");
    B.add(0, "a");
    B.add(0, "b");
    for (long k = 0; k <= m; ++k) B.add(0, lbl("c", k));
    for (long k = 0; k <= m; ++k) B.add(0, lbl("d", k));

    // 1-simplexes of the 1-skeleton, diagonals of rho_k and nu_j
    for (long j = 1; j <= gp; ++j) B.add(1, lbl("t", j), {"sigma", "sigma"});
    for (long k = 0; k <= m; ++k) B.add(1, lbl("q", k), {"sigma", "sigma"});
    B.add(1, "h", {"sigma", "sigma"});
    for (long k = 0; k <= m; ++k) B.add(1, lbl("g", k), {"sigma", "sigma"});
    for (long j = 1; j <= gp; ++j) B.add(1, lbl("f", j), {"sigma", "sigma"});
    // cone edges of delta and eps
    for (long l = 0; l < L; ++l) B.add(1, lbl("e", l), {"sigma", "a"});
    B.add(1, "A+", {"a", "b"});
    B.add(1, "A-", {"a", "b"});
    for (char s : {'+', '-'}) {
        for (long l = 0; l < L; ++l) B.add(1, lbl(pm("S", s), l), {"sigma", "b"});
    }

    // rho_k and nu_j
    for (long k = 0; k <= m; ++k) {
        B.add(2, lbl("rho1", k), {"h", lbl("g", k), lbl("q", k)});
        B.add(2, lbl("rho2", k), {lbl("q", k), lbl("g", k), "h"});
    }
    for (long j = 1; j <= gp; ++j) {
        const std::string t = lbl("t", j), f = lbl("f", j);
        if (inv.eps(static_cast<int>(j)) == 1) {
            B.add(2, lbl("nu1", j), {"h", f, t});
        } else {
            B.add(2, lbl("nu1", j), {"h", t, f});
        }
        B.add(2, lbl("nu2", j), {t, f, "h"});
    }

    // delta
    for (long l = 0; l < L; ++l) {
        const PolygonSide& s = side[static_cast<std::size_t>(l)];
        B.add(2, lbl("delta", l), {s.letter, lbl("e", s.s1), lbl("e", s.s2)});
    }

    // eps: 2-simplexes
    for (char s : {'+', '-'}) {
        for (long l = 0; l < L; ++l) {
            B.add(2, lbl(pm("E", s), l), {lbl("e", l), lbl(pm("S", s), l), pm("A", s)});
        }
    }
    for (char s : {'+', '-'}) {
        for (long l = 0; l < L; ++l) {
            const PolygonSide& ps = side[static_cast<std::size_t>(l)];
            B.add(2, lbl(pm("T", s), l),
                  {ps.letter, lbl(pm("S", s), ps.s1), lbl(pm("S", s), ps.s2)});
        }
    }
    for (long l = 0; l < L; ++l) {
        if (h_flipped(inv, l)) {
            B.add(2, lbl("H", l), {"h", lbl("S-", l), lbl("S+", l)});
        } else {
            B.add(2, lbl("H", l), {"h", lbl("S+", l), lbl("S-", l)});
        }
    }
    for (long l = 0; l < L; ++l) {
        const PolygonSide& ps = side[static_cast<std::size_t>(l)];
        const auto [first, second] = f_signs(inv, l);
        B.add(2, lbl("F", l),
              {ps.diagonal, lbl(pm("S", first), ps.s1), lbl(pm("S", second), ps.s2)});
    }

    // mu_k and zeta_k (1- and 2-simplexes first, then 3-simplexes need rho)
    // Fibers add their own 1-, 2- and 3-simplexes; 3-simplexes of eps come after.
    // The builder requires faces to exist, so split: 1- and 2-simplexes of all
    // fibers are added inside build_fiber before its 3-simplexes, which only
    // reference rho and the fiber's own 2-simplexes.
    for (long k = 0; k <= m; ++k) build_fiber(B, inv, cx.words[static_cast<std::size_t>(k)], k);

    // eps: 3-simplexes
    for (char s : {'+', '-'}) {
        for (long l = 0; l < L; ++l) {
            const PolygonSide& ps = side[static_cast<std::size_t>(l)];
            B.add(3, lbl(pm("D", s), l),
                  {lbl("delta", l), lbl(pm("T", s), l), lbl(pm("E", s), ps.s1),
                   lbl(pm("E", s), ps.s2)});
        }
    }
    auto H = [&](long l) { return lbl("H", wrap(l)); };
    auto F = [&](long l) { return lbl("F", wrap(l)); };
    auto Tp = [&](long l) { return lbl("T+", wrap(l)); };
    auto Tm = [&](long l) { return lbl("T-", wrap(l)); };
    for (long j = 1; j <= gp; ++j) {
        const std::string n1 = lbl("nu1", j), n2 = lbl("nu2", j);
        std::vector<std::string> N1, Np1, N2, Np2;
        if (inv.type == SeifertType::O1) {
            if (j % 2 == 1) {
                N1 = {n1, H(2 * j - 1), F(2 * j - 2), Tm(2 * j - 2)};
                Np1 = {n1, H(2 * j), F(2 * j), Tm(2 * j)};
                N2 = {n2, Tp(2 * j - 2), F(2 * j - 2), H(2 * j - 2)};
                Np2 = {n2, Tp(2 * j), F(2 * j), H(2 * j + 1)};
            } else {
                N1 = {n1, H(2 * j - 2), F(2 * j - 3), Tm(2 * j - 3)};
                Np1 = {n1, H(2 * j - 1), F(2 * j - 1), Tm(2 * j - 1)};
                N2 = {n2, Tp(2 * j - 3), F(2 * j - 3), H(2 * j - 3)};
                Np2 = {n2, Tp(2 * j - 1), F(2 * j - 1), H(2 * j)};
            }
        } else if (inv.type == SeifertType::O2) {
            if (j % 2 == 1) {
                N1 = {n1, H(2 * j - 1), Tm(2 * j - 2), F(2 * j - 2)};
                Np1 = {n1, H(2 * j), Tp(2 * j), F(2 * j)};
                N2 = {n2, Tp(2 * j - 2), F(2 * j - 2), H(2 * j - 2)};
                Np2 = {n2, Tm(2 * j), F(2 * j), H(2 * j + 1)};
            } else {
                N1 = {n1, H(2 * j - 2), Tp(2 * j - 3), F(2 * j - 3)};
                Np1 = {n1, H(2 * j - 1), Tm(2 * j - 1), F(2 * j - 1)};
                N2 = {n2, Tm(2 * j - 3), F(2 * j - 3), H(2 * j - 3)};
                Np2 = {n2, Tp(2 * j - 1), F(2 * j - 1), H(2 * j)};
            }
        } else if (inv.eps(static_cast<int>(j)) == 1) {
            N1 = {n1, H(2 * j - 1), F(2 * j - 2), Tm(2 * j - 2)};
            Np1 = {n1, H(2 * j), F(2 * j - 1), Tm(2 * j - 1)};
            N2 = {n2, Tp(2 * j - 2), F(2 * j - 2), H(2 * j - 2)};
            Np2 = {n2, Tp(2 * j - 1), F(2 * j - 1), H(2 * j - 1)};
        } else {
            N1 = {n1, H(2 * j - 1), Tm(2 * j - 2), F(2 * j - 2)};
            Np1 = {n1, H(2 * j), Tp(2 * j - 1), F(2 * j - 1)};
            N2 = {n2, Tp(2 * j - 2), F(2 * j - 2), H(2 * j - 2)};
            Np2 = {n2, Tm(2 * j - 1), F(2 * j - 1), H(2 * j - 1)};
        }
        B.add(3, lbl("N1", j), N1);
        B.add(3, lbl("N'1", j), Np1);
        B.add(3, lbl("N2", j), N2);
        B.add(3, lbl("N'2", j), Np2);
    }
    for (long k = 0; k <= m; ++k) {
        B.add(3, lbl("R1", k), {lbl("rho1", k), H(star + k + 1), F(star + k), Tm(star + k)});
        B.add(3, lbl("R2", k), {lbl("rho2", k), Tp(star + k), F(star + k), H(star + k)});
    }

    build_boundaries(cx);
    return cx;
}

const SparseIntMatrix& boundary_matrix(const DeltaComplex& cx, int d) {
    if (d < 1 || d > 3) throw std::out_of_range("boundary degree must be 1..3");
    return cx.d(d);
}

std::vector<std::string> face_identity_violations(const DeltaComplex& cx) {
    std::vector<std::string> out;
    for (int d = 2; d <= 3; ++d) {
        for (std::size_t s = 0; s < cx.count(d); ++s) {
            const auto& f = cx.face_list(d, s);
            for (int i = 0; i < d; ++i) {
                for (int j = i + 1; j <= d; ++j) {
                    const std::size_t lhs = cx.face_list(d - 1, f[static_cast<std::size_t>(j)])[static_cast<std::size_t>(i)];
                    const std::size_t rhs = cx.face_list(d - 1, f[static_cast<std::size_t>(i)])[static_cast<std::size_t>(j - 1)];
                    if (lhs != rhs) {
                        out.push_back(cx.label(d, s) + ": d" + std::to_string(i) + " d" +
                                      std::to_string(j) + " = " + cx.label(d - 2, lhs) + " but d" +
                                      std::to_string(j - 1) + " d" + std::to_string(i) + " = " +
                                      cx.label(d - 2, rhs));
                    }
                }
            }
        }
    }
    return out;
}

CohomologyBasis simplicial_cohomology(const DeltaComplex& cx, std::uint32_t p) {
    return cohomology_from_boundaries({cx.count(0), cx.count(1), cx.count(2), cx.count(3)},
                                      {&cx.boundary[0], &cx.boundary[1], &cx.boundary[2]}, p);
}

std::array<IntegralHomologyGroup, 4> simplicial_integral_homology(const DeltaComplex& cx) {
    return integral_homology({cx.count(0), cx.count(1), cx.count(2), cx.count(3)},
                             {&cx.boundary[0], &cx.boundary[1], &cx.boundary[2]});
}

std::string export_complex(const DeltaComplex& cx) {
    std::ostringstream os;
    for (int d = 0; d <= 3; ++d) {
        for (std::size_t i = 0; i < cx.count(d); ++i) {
            os << "SIMPLEX " << d << ' ' << cx.label(d, i) << " FACES";
            if (d > 0) {
                for (std::size_t f : cx.face_list(d, i)) os << ' ' << cx.label(d - 1, f);
            }
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace seifert
