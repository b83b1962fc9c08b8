#include "ncqm/serialize.hpp"

#include <charconv>
#include <sstream>
#include <variant>

namespace ncqm {

std::string scalar_str(const Rational& r) { return r.get_str(); }

std::string scalar_str(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

std::string scalar_str(const QSqrt& v) { return v.str(); }

std::vector<Rational> parse_rational_list(const std::string& csv, std::size_t expect) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (expect != 0 && out.size() != expect)
        throw std::invalid_argument("expected " + std::to_string(expect) +
                                    " comma-separated scalars, got " +
                                    std::to_string(out.size()));
    return out;
}

ExtensionParamsQ parse_extension_params(const std::string& csv) {
    auto v = parse_rational_list(csv, 3);
    ExtensionParamsQ ep{v[0], v[1], v[2]};
    ep.validate();
    return ep;
}

GroupElementQ parse_group_element(const std::string& csv) {
    auto v = parse_rational_list(csv, 7);
    GroupElementQ g;
    g.theta = v[0];
    g.phi = v[1];
    g.psi = v[2];
    g.q = {v[3], v[4]};
    g.p = {v[5], v[6]};
    return g;
}

DualVectorQ parse_dual_vector(const std::string& csv) {
    auto v = parse_rational_list(csv, 7);
    DualVectorQ F;
    for (int i = 0; i < 7; ++i) F.X[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)];
    return F;
}

Json to_json(const GroupElementQ& g) {
    Json j;
    j["theta"] = scalar_str(g.theta);
    j["phi"] = scalar_str(g.phi);
    j["psi"] = scalar_str(g.psi);
    j["q"] = Json::array({scalar_str(g.q[0]), scalar_str(g.q[1])});
    j["p"] = Json::array({scalar_str(g.p[0]), scalar_str(g.p[1])});
    return j;
}

Json to_json(const DualVectorQ& F) {
    Json xs = Json::array();
    for (const auto& c : F.X) xs.push_back(scalar_str(c));
    return Json{{"x", xs}};
}

Json to_json(const MasterUnknowns& u) {
    Json j;
    j["A"] = scalar_str(u.A);
    j["B"] = scalar_str(u.B);
    j["C"] = scalar_str(u.C);
    j["D"] = scalar_str(u.D);
    j["E"] = scalar_str(u.E);
    j["F"] = scalar_str(u.F);
    j["G"] = scalar_str(u.G);
    return j;
}

namespace {

Json orbit_params(const OrbitClass& c) {
    Json p;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Generic4D>) {
                p["rho"] = scalar_str(v.rho);
                p["sigma"] = scalar_str(v.sigma);
                p["tau"] = scalar_str(v.tau);
            } else if constexpr (std::is_same_v<T, Surface2D>) {
                p["rho"] = scalar_str(v.rho);
                p["zeta"] = scalar_str(v.zeta);
                p["kappa"] = scalar_str(v.kappa);
                p["delta"] = scalar_str(v.delta);
            } else if constexpr (std::is_same_v<T, FourDSigmaOnly>) {
                p["rho"] = scalar_str(v.rho);
                p["sigma"] = scalar_str(v.sigma);
            } else if constexpr (std::is_same_v<T, FourDTauOnly>) {
                p["rho"] = scalar_str(v.rho);
                p["tau"] = scalar_str(v.tau);
            } else if constexpr (std::is_same_v<T, FourDRhoZero>) {
                p["sigma"] = scalar_str(v.sigma);
                p["tau"] = scalar_str(v.tau);
            } else if constexpr (std::is_same_v<T, FourDRhoOnly>) {
                p["rho"] = scalar_str(v.rho);
            } else if constexpr (std::is_same_v<T, TwoDTau>) {
                p["c1"] = scalar_str(v.c1);
                p["c2"] = scalar_str(v.c2);
                p["tau"] = scalar_str(v.tau);
            } else if constexpr (std::is_same_v<T, TwoDSigma>) {
                p["c3"] = scalar_str(v.c3);
                p["c4"] = scalar_str(v.c4);
                p["sigma"] = scalar_str(v.sigma);
            } else {
                p["c1"] = scalar_str(v.c1);
                p["c2"] = scalar_str(v.c2);
                p["c3"] = scalar_str(v.c3);
                p["c4"] = scalar_str(v.c4);
            }
        },
        c);
    return p;
}

}  // namespace

Json orbit_to_json(const OrbitClass& c, const ExtensionParamsQ& ep) {
    Json j;
    j["family"] = family_name(c);
    j["params"] = orbit_params(c);
    j["dimension"] = orbit_dimension(c);
    Json rep = Json::array();
    for (const auto& x : orbit_representative(c, ep).X) rep.push_back(scalar_str(x));
    j["representative"] = rep;
    return j;
}

Json to_json(const WeylPolyX& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["mono"] = Json::array({e[0], e[1], e[2], e[3]});
        t["re"] = scalar_str(c.re);
        t["im"] = scalar_str(c.im);
        terms.push_back(t);
    }
    return terms;
}

Json to_json(const WeylPolyD& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["mono"] = Json::array({e[0], e[1], e[2], e[3]});
        t["re"] = scalar_str(c.real());
        t["im"] = scalar_str(c.imag());
        terms.push_back(t);
    }
    return terms;
}

Json to_json(const BiPoly& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) {
        Json t;
        t["z"] = k.first;
        t["zbar"] = k.second;
        t["re"] = scalar_str(c.re);
        t["im"] = scalar_str(c.im);
        terms.push_back(t);
    }
    return terms;
}

Json to_json(const BiPolyD& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms()) {
        Json t;
        t["z"] = k.first;
        t["zbar"] = k.second;
        t["re"] = scalar_str(c.real());
        t["im"] = scalar_str(c.imag());
        terms.push_back(t);
    }
    return terms;
}

Json to_json(const Mat4Q& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) j.push_back(scalar_str(m(i, k)));
    return j;
}

Json to_json(const Mat4D& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) j.push_back(scalar_str(m(i, k)));
    return j;
}

std::string points_to_csv(const std::vector<SurfacePoint>& pts) {
    std::string out = "rho,sigma,tau\n";
    for (const auto& p : pts) {
        out += scalar_str(to_double(p.rho));
        out += ',';
        out += scalar_str(to_double(p.sigma));
        out += ',';
        out += scalar_str(to_double(p.tau));
        out += '\n';
    }
    return out;
}

Json points_to_json(const std::vector<SurfacePoint>& pts) {
    Json j = Json::array();
    for (const auto& p : pts)
        j.push_back(Json::array({scalar_str(to_double(p.rho)), scalar_str(to_double(p.sigma)),
                                 scalar_str(to_double(p.tau))}));
    return j;
}

}  // namespace ncqm
