#include "tristar/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tristar {

namespace {

Mat two_site(char ax, int i, int j, double coeff) {
    PauliString ps;
    ps.coefficient = coeff;
    ps.factors = {{i, ax}, {j, ax}};
    return compile(ps);
}

}  // namespace

Mat plaquette(int k) {
    PauliString ps;
    switch (k) {
        case 1: ps.factors = {{1, 'z'}, {2, 'x'}, {3, 'y'}}; break;
        case 2: ps.factors = {{4, 'z'}, {2, 'y'}, {3, 'x'}}; break;
        case 3: ps.factors = {{1, 'x'}, {2, 'z'}, {4, 'y'}}; break;
        case 4: ps.factors = {{1, 'y'}, {3, 'z'}, {4, 'x'}}; break;
        default: throw Error("BadIndex", "plaquette index must be 1..4");
    }
    return compile(ps);
}

Mat build_hamiltonian(const Couplings& c) {
    Mat h = two_site('x', 1, 3, c.jx);
    h += two_site('x', 2, 4, c.jx);
    h += two_site('y', 1, 2, c.jy);
    h += two_site('y', 3, 4, c.jy);
    h += two_site('z', 2, 3, c.jz);
    h += two_site('z', 1, 4, c.jz);
    const Mat s1 = plaquette(1), s2 = plaquette(2), s3 = plaquette(3);
    h += (s1 * s2 + s2 * s3 + s3 * s1) * cplx(c.jp);
    return h;
}

std::vector<LevelEntry> analytic_levels(const Couplings& c) {
    const double r = 2.0 * std::sqrt(c.jx * c.jx + c.jy * c.jy + c.jz * c.jz);
    struct Raw {
        double e;
        std::string label;
    };
    std::vector<Raw> raw = {
        {3 * c.jp + r, "E_p^+"}, {3 * c.jp - r, "E_p^-"},
        {-c.jp + 2 * c.jx, "E_x^+"}, {-c.jp - 2 * c.jx, "E_x^-"},
        {-c.jp + 2 * c.jy, "E_y^+"}, {-c.jp - 2 * c.jy, "E_y^-"},
        {-c.jp + 2 * c.jz, "E_z^+"}, {-c.jp - 2 * c.jz, "E_z^-"},
    };
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        return a.e < b.e || (a.e == b.e && a.label < b.label);
    });
    std::vector<LevelEntry> out;
    std::size_t i = 0;
    while (i < raw.size()) {
        std::size_t j = i + 1;
        double sum = raw[i].e;
        std::string label = raw[i].label;
        while (j < raw.size() && raw[j].e - raw[j - 1].e <= 1e-9) {
            sum += raw[j].e;
            label += "/" + raw[j].label;
            ++j;
        }
        out.push_back({sum / static_cast<double>(j - i), static_cast<int>(2 * (j - i)), label});
        i = j;
    }
    return out;
}

ConservationReport verify_conserved(const Couplings& c) {
    const Mat h = build_hamiltonian(c);
    std::array<Mat, 4> s{plaquette(1), plaquette(2), plaquette(3), plaquette(4)};
    ConservationReport rep;
    for (int k = 0; k < 4; ++k)
        rep.norms.emplace_back("[S" + std::to_string(k + 1) + ",H]", commutator(s[k], h).fro());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            rep.norms.emplace_back("[S" + std::to_string(i + 1) + ",S" + std::to_string(j + 1) + "]",
                                   commutator(s[i], s[j]).fro());
    for (const auto& [_, v] : rep.norms) rep.worst = std::max(rep.worst, v);
    rep.pass = rep.worst < kAlgebraTol;
    return rep;
}

// ---------------------------------------------------------------------------
// Catalog. Amplitudes are exact rational / sqrt-rational tables in the
// computational basis (index = b1 b2 b3 b4, site 1 the most significant bit).

namespace {

struct CatalogEntry {
    std::vector<std::pair<int, cplx>> terms;
    std::optional<double> energy_coeff;   // units of jx at the default-ratio point
};

const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> table = [] {
        const double h = 0.5;
        const double r2 = 1.0 / std::sqrt(2.0);
        const double a3 = 1.0 / (2.0 * std::sqrt(3.0));
        const double a15 = 1.0 / (2.0 * std::sqrt(15.0));
        const double a8 = 1.0 / (2.0 * std::sqrt(2.0));
        const cplx ih(0, 0.5);
        std::map<std::string, CatalogEntry> t;
        t["g1"] = {{{1, -h}, {2, h}, {13, -h}, {14, h}}, -6};
        t["g2"] = {{{3, -r2}, {12, r2}}, -6};
        t["g3"] = {{{4, -h}, {7, -h}, {8, h}, {11, h}}, -6};
        t["g4"] = {{{5, -r2}, {10, r2}}, -6};
        t["o1"] = {{{0, a15}, {15, a15}, {6, 2 * a15}, {9, 2 * a15}, {5, -5 * a15}, {10, -5 * a15}}, 0};
        t["o2"] = {{{1, h}, {4, h}, {11, h}, {14, h}}, 0};
        t["o3"] = {{{2, h}, {7, h}, {8, h}, {13, h}}, 0};
        t["o4"] = {{{3, a3}, {12, a3}, {5, 2 * a3}, {10, 2 * a3}, {6, -a3}, {9, -a3}}, 0};
        t["e9"] = {{{1, h}, {4, -h}, {11, -h}, {14, h}}, -4};
        t["e10"] = {{{2, h}, {7, -h}, {8, -h}, {13, h}}, -4};
        t["e11"] = {{{0, -r2}, {15, r2}}, 2};
        t["e12"] = {{{1, -h}, {2, -h}, {13, h}, {14, h}}, 2};
        t["e13"] = {{{4, -h}, {8, -h}, {7, h}, {11, h}}, 2};
        t["e14"] = {{{6, -r2}, {9, r2}}, 2};
        t["e15"] = {{{0, a3}, {15, a3}, {5, a3}, {10, a3}, {6, 2 * a3}, {9, 2 * a3}}, 12};
        t["e16"] = {{{3, a15}, {12, a15}, {5, 2 * a15}, {10, 2 * a15}, {6, 5 * a15}, {9, 5 * a15}}, 12};
        t["GHZ"] = {{{0, r2}, {15, r2}}, std::nullopt};
        t["W"] = {{{1, h}, {2, h}, {4, h}, {8, h}}, std::nullopt};
        t["chi00"] = {{{0, a8}, {3, a8}, {5, a8}, {6, a8}, {9, a8}, {10, -a8}, {12, -a8}, {15, a8}},
                      std::nullopt};
        // Plaquette eigenbasis inside the ground space: S*A = (g1 -+ i g3)/sqrt2,
        // S*B = (g2 -+ i g4)/sqrt2 (upper sign for S+).
        t["S+A"] = {{{1, -h * r2}, {2, h * r2}, {13, -h * r2}, {14, h * r2},
                     {4, -ih * r2}, {7, -ih * r2}, {8, ih * r2}, {11, ih * r2}}, -6};
        t["S-A"] = {{{1, -h * r2}, {2, h * r2}, {13, -h * r2}, {14, h * r2},
                     {4, ih * r2}, {7, ih * r2}, {8, -ih * r2}, {11, -ih * r2}}, -6};
        t["S+B"] = {{{3, -h}, {12, h}, {5, cplx(0, h)}, {10, cplx(0, -h)}}, -6};
        t["S-B"] = {{{3, -h}, {12, h}, {5, cplx(0, -h)}, {10, cplx(0, h)}}, -6};
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, _] : catalog()) n.push_back(k);
        return n;
    }();
    return names;
}

State paper_state(const std::string& name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw Error("UnknownName", "no catalog state named '" + name + "'");
    State s;
    s.label = name;
    s.amp.assign(16, cplx{});
    for (const auto& [idx, a] : it->second.terms) s.amp[idx] = a;
    const double n = norm(s.amp);
    for (auto& a : s.amp) a /= n;
    return s;
}

std::optional<double> catalog_energy_coeff(const std::string& name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) throw Error("UnknownName", "no catalog state named '" + name + "'");
    return it->second.energy_coeff;
}

std::pair<double, double> eigen_residual(const State& s, const Couplings& c) {
    const Mat h = build_hamiltonian(c);
    const Vec hv = mul(h, s.amp);
    const double e = dot(s.amp, hv).real();
    return {e, norm(axpy(-e, s.amp, hv))};
}

GaugeSector sector_of(const State& s) {
    GaugeSector sec;
    int vals[3];
    for (int k = 1; k <= 3; ++k) {
        const Vec sv = mul(plaquette(k), s.amp);
        const double m = dot(s.amp, sv).real();
        const double resid = norm(axpy(-m, s.amp, sv));
        if (resid >= 1e-8)
            throw Error("NotSectorEigenstate",
                        s.label + ": ||(S" + std::to_string(k) + " - <S" + std::to_string(k) +
                            ">)psi|| = " + std::to_string(resid));
        vals[k - 1] = m >= 0 ? 1 : -1;
    }
    sec.s1 = vals[0];
    sec.s2 = vals[1];
    sec.s3 = vals[2];
    sec.fully_frustrated = (sec.s1 == sec.s2 && sec.s2 == sec.s3);
    return sec;
}

State flip_all(const State& s) {
    State out;
    out.label = s.label;
    out.amp.assign(16, cplx{});
    for (int k = 0; k < 16; ++k) out.amp[15 - k] = s.amp[k];
    return out;
}

Mat ground_action(const Mat& op) {
    std::array<State, 4> g{paper_state("g1"), paper_state("g2"), paper_state("g3"),
                           paper_state("g4")};
    Mat m(4, 4);
    for (int i = 0; i < 4; ++i) {
        Vec img = mul(op, g[i].amp);
        for (int j = 0; j < 4; ++j) {
            m(i, j) = dot(g[j].amp, img);
            img = axpy(-m(i, j), g[j].amp, img);
        }
        const double leak = norm(img);
        if (leak >= 1e-10)
            throw Error("SubspaceLeak",
                        "operator maps g" + std::to_string(i + 1) +
                            " outside the ground space, residual " + std::to_string(leak));
    }
    return m;
}

Mat plaquette_ground_action() { return ground_action(plaquette(1)); }

}  // namespace tristar
