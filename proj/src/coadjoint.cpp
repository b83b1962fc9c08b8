#include "ncqm/coadjoint.hpp"

namespace ncqm {

std::string family_name(const OrbitClass& c) {
    struct Visitor {
        std::string operator()(const Generic4D&) const { return "Generic4D"; }
        std::string operator()(const Surface2D&) const { return "Surface2D"; }
        std::string operator()(const FourDSigmaOnly&) const { return "FourD_SigmaOnly"; }
        std::string operator()(const FourDTauOnly&) const { return "FourD_TauOnly"; }
        std::string operator()(const FourDRhoZero&) const { return "FourD_RhoZero"; }
        std::string operator()(const FourDRhoOnly&) const { return "FourD_RhoOnly"; }
        std::string operator()(const TwoDTau&) const { return "TwoD_Tau"; }
        std::string operator()(const TwoDSigma&) const { return "TwoD_Sigma"; }
        std::string operator()(const Point0D&) const { return "Point0D"; }
    };
    return std::visit(Visitor{}, c);
}

int orbit_dimension(const OrbitClass& c) {
    struct Visitor {
        int operator()(const Generic4D&) const { return 4; }
        int operator()(const Surface2D&) const { return 2; }
        int operator()(const FourDSigmaOnly&) const { return 4; }
        int operator()(const FourDTauOnly&) const { return 4; }
        int operator()(const FourDRhoZero&) const { return 4; }
        int operator()(const FourDRhoOnly&) const { return 4; }
        int operator()(const TwoDTau&) const { return 2; }
        int operator()(const TwoDSigma&) const { return 2; }
        int operator()(const Point0D&) const { return 0; }
    };
    return std::visit(Visitor{}, c);
}

OrbitClass classify(const DualVectorQ& F, const ExtensionParamsQ& ep) {
    ep.validate();
    const Rational& rho = F.X[4];
    const Rational& sigma = F.X[5];
    const Rational& tau = F.X[6];
    if (rho == 0 && sigma == 0 && tau == 0) return Point0D{F.X[0], F.X[1], F.X[2], F.X[3]};
    if (rho == 0) {
        if (sigma == 0) return TwoDTau{F.X[0], F.X[1], tau};
        if (tau == 0) return TwoDSigma{F.X[2], F.X[3], sigma};
        return FourDRhoZero{sigma, tau};
    }
    if (sigma == 0 && tau == 0) return FourDRhoOnly{rho};
    if (tau == 0) return FourDSigmaOnly{rho, sigma};
    if (sigma == 0) return FourDTauOnly{rho, tau};
    if (det_w(F, ep) == 0) {
        auto kd = rational_invariants(F, ep);
        return Surface2D{rho, rho / sigma, kd[0], kd[1]};
    }
    return Generic4D{rho, sigma, tau};
}

OrbitClass classify(const std::array<double, 7>& F, const ExtensionParamsQ& ep, double tol) {
    ep.validate();
    if (!(tol >= 0)) throw std::invalid_argument("classify: tolerance must be >= 0");
    DualVectorQ snapped;
    for (int i = 0; i < 7; ++i)
        snapped.X[i] = std::abs(F[i]) <= tol ? Rational(0) : Rational(F[i]);
    const Rational& rho = snapped.X[4];
    const Rational& sigma = snapped.X[5];
    const Rational& tau = snapped.X[6];
    if (rho != 0 && sigma != 0 && tau != 0 &&
        std::abs(to_double(det_w(snapped, ep))) <= tol) {
        // Project onto the surface so the exact branch logic sees det W = 0.
        snapped.X[6] = ep.alpha * ep.alpha * rho * rho / (ep.gamma * ep.beta * sigma);
    }
    return classify(snapped, ep);
}

DualVectorQ orbit_representative(const OrbitClass& c, const ExtensionParamsQ& ep) {
    ep.validate();
    struct Visitor {
        const ExtensionParamsQ& ep;
        DualVectorQ operator()(const Generic4D& o) const {
            return {{0, 0, 0, 0, o.rho, o.sigma, o.tau}};
        }
        DualVectorQ operator()(const Surface2D& o) const {
            if (o.zeta == 0) throw std::domain_error("surface representative: zeta = 0");
            Rational sigma = o.rho / o.zeta;
            Rational tau = o.zeta * ep.alpha * ep.alpha * o.rho / (ep.gamma * ep.beta);
            return {{0, 0, o.kappa, o.delta, o.rho, sigma, tau}};
        }
        DualVectorQ operator()(const FourDSigmaOnly& o) const {
            return {{0, 0, 0, 0, o.rho, o.sigma, 0}};
        }
        DualVectorQ operator()(const FourDTauOnly& o) const {
            return {{0, 0, 0, 0, o.rho, 0, o.tau}};
        }
        DualVectorQ operator()(const FourDRhoZero& o) const {
            return {{0, 0, 0, 0, 0, o.sigma, o.tau}};
        }
        DualVectorQ operator()(const FourDRhoOnly& o) const {
            return {{0, 0, 0, 0, o.rho, 0, 0}};
        }
        DualVectorQ operator()(const TwoDTau& o) const {
            return {{o.c1, o.c2, 0, 0, 0, 0, o.tau}};
        }
        DualVectorQ operator()(const TwoDSigma& o) const {
            return {{0, 0, o.c3, o.c4, 0, o.sigma, 0}};
        }
        DualVectorQ operator()(const Point0D& o) const {
            return {{o.c1, o.c2, o.c3, o.c4, 0, 0, 0}};
        }
    };
    return std::visit(Visitor{ep}, c);
}

int sign_a_plus_b_sqrt(const Rational& a, const Rational& b, const Rational& m) {
    if (m < 0) throw std::domain_error("sign_a_plus_b_sqrt: negative radicand");
    if (m == 0 || b == 0) return sign(a);
    if (a == 0) return sign(b);
    int sa = sign(a), sb = sign(b);
    if (sa == sb) return sa;
    Rational lhs = a * a;
    Rational rhs = b * b * m;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

bool coupled_boson_admissible(const Rational& rho, const Rational& sigma,
                              const ExtensionParamsQ& ep, const Rational& Kg) {
    ep.validate();
    if (Kg <= 0) throw std::invalid_argument("coupled boson: Kg must be > 0");
    if (rho == 0 || sigma == 0) return false;
    if (sign(rho) == sign(sigma)) return false;
    // rho + (sigma beta / alpha) sqrt(gamma Kg / beta) >= 0
    Rational m = ep.gamma * Kg / ep.beta;
    return sign_a_plus_b_sqrt(rho, sigma * ep.beta / ep.alpha, m) >= 0;
}

namespace {

std::vector<Rational> grid_values(const GridRange& r) {
    if (r.count < 1) throw std::invalid_argument("surface sample: grid count must be >= 1");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(r.count));
    if (r.count == 1) {
        out.push_back(r.lo);
        return out;
    }
    Rational step = (r.hi - r.lo) / Rational(r.count - 1);
    for (int i = 0; i < r.count; ++i) out.push_back(r.lo + step * Rational(i));
    return out;
}

bool sqrt_if_perfect_square(const Rational& m, Rational& root) {
    if (m < 0) return false;
    mpz_class num = m.get_num(), den = m.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

}  // namespace

std::vector<SurfacePoint> surface_sample(SurfaceSampleKind kind, const GridRange& a,
                                         const GridRange& b, const ExtensionParamsQ& ep,
                                         const Rational& Kg) {
    ep.validate();
    std::vector<SurfacePoint> out;
    switch (kind) {
        case SurfaceSampleKind::SRhoZeta: {
            for (const auto& rho : grid_values(a)) {
                if (rho == 0) continue;
                for (const auto& zeta : grid_values(b)) {
                    if (zeta == 0) continue;
                    Rational sigma = rho / zeta;
                    Rational tau = zeta * ep.alpha * ep.alpha * rho / (ep.gamma * ep.beta);
                    out.push_back({rho, sigma, tau});
                }
            }
            break;
        }
        case SurfaceSampleKind::CoupledBoson: {
            if (Kg <= 0) throw std::invalid_argument("surface sample: Kg must be > 0");
            for (const auto& rho : grid_values(a))
                for (const auto& sigma : grid_values(b))
                    if (coupled_boson_admissible(rho, sigma, ep, Kg))
                        out.push_back({rho, sigma, Kg * sigma});
            break;
        }
        case SurfaceSampleKind::Intersection: {
            if (Kg <= 0) throw std::invalid_argument("surface sample: Kg must be > 0");
            Rational momega;
            if (!sqrt_if_perfect_square(ep.gamma * Kg / ep.beta, momega))
                throw std::domain_error(
                    "surface sample: intersection needs gamma*Kg/beta to be a perfect square");
            Rational zeta_ho = -ep.beta * momega / ep.alpha;
            for (const auto& sigma : grid_values(a)) {
                if (sigma == 0) continue;
                out.push_back({zeta_ho * sigma, sigma, Kg * sigma});
            }
            break;
        }
    }
    return out;
}

}  // namespace ncqm
