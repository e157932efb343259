#include "qbell/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "qbell/audits.hpp"
#include "qbell/chsh.hpp"
#include "qbell/classical.hpp"
#include "qbell/format.hpp"
#include "qbell/simulate.hpp"

namespace qbell::cli {

namespace {

constexpr double kAgreementTol = 1e-12;

double deg_to_rad(double deg) { return deg * (std::numbers::pi / 180.0); }

/// Angle actually used for the spin-1/2 computation; photon inputs are
/// polarizer angles and enter doubled.
double spin_angle_rad(const RunConfig& cfg, double deg) {
    return deg_to_rad(cfg.photon ? 2.0 * deg : deg);
}

AxisQuadruple resolve_quadruple(const RunConfig& cfg) {
    if (cfg.axes) {
        return {(*cfg.axes)[0], (*cfg.axes)[1], (*cfg.axes)[2], (*cfg.axes)[3]};
    }
    if (cfg.coplanar_theta_deg) {
        return coplanar_axes(spin_angle_rad(cfg, *cfg.coplanar_theta_deg));
    }
    throw std::invalid_argument("no axis configuration: pass --coplanar-theta or --axes");
}

std::vector<double> split_numbers(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        size_t used = 0;
        const double v = std::stod(token, &used);
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
            ++used;
        }
        if (used != token.size()) {
            throw std::invalid_argument("malformed number: '" + token + "'");
        }
        out.push_back(v);
    }
    return out;
}

void print_report(std::ostream& out, const audits::AuditReport& r, const std::string& label,
                  char d) {
    out << "instance" << d << label << d << "lhs=" << fmt12(r.lhs) << d << "rhs=" << fmt12(r.rhs)
        << d << (r.bound_respected ? "PASS" : "VIOLATION") << "\n";
    if (r.witness) {
        out << "witness" << d << *r.witness << "\n";
    }
}

} // namespace

Axis parse_axis(const std::string& text) {
    const auto parts = split_numbers(text);
    if (parts.size() != 3) {
        throw std::invalid_argument("axis literal must be x,y,z");
    }
    return {parts[0], parts[1], parts[2]};
}

LhvStrategy parse_strategy(const std::string& spec) {
    if (spec == "uniform") {
        return LhvStrategy::uniform();
    }
    if (spec.rfind("point:", 0) == 0) {
        const std::string signs = spec.substr(6);
        if (signs.size() != 4) {
            throw std::invalid_argument("point strategy needs four signs, e.g. point:++-+");
        }
        ClassicalAssignment x{};
        Spin* fields[4] = {&x.a1, &x.a2, &x.b1, &x.b2};
        for (size_t i = 0; i < 4; ++i) {
            if (signs[i] == '+') {
                *fields[i] = Spin::up;
            } else if (signs[i] == '-') {
                *fields[i] = Spin::down;
            } else {
                throw std::invalid_argument("point strategy signs must be + or -");
            }
        }
        return LhvStrategy::point_mass(x);
    }
    std::string body = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) {
            throw std::invalid_argument("cannot open strategy file: " + spec.substr(1));
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        body = buf.str();
        for (char& c : body) {
            if (c == '\n' || c == '\t' || c == ' ') {
                c = ',';
            }
        }
        // collapse empty tokens
        std::string compact;
        bool prev_comma = true;
        for (char c : body) {
            if (c == ',') {
                if (!prev_comma) {
                    compact += c;
                }
                prev_comma = true;
            } else {
                compact += c;
                prev_comma = false;
            }
        }
        if (!compact.empty() && compact.back() == ',') {
            compact.pop_back();
        }
        body = compact;
    }
    const auto values = split_numbers(body);
    if (values.size() != 16) {
        throw std::invalid_argument("strategy weights must list 16 values");
    }
    std::array<double, 16> w{};
    std::copy(values.begin(), values.end(), w.begin());
    return LhvStrategy::from_weights(w);
}

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const char d = cfg.delimiter;
    const AxisQuadruple q = resolve_quadruple(cfg);
    const FourProbTable t = table2(q, cfg.symmetry, cfg.backend);
    out << "# signs" << d << "probability\n";
    for (int idx = 0; idx < 16; ++idx) {
        out << SignQuadruple::from_index(idx).str() << d << fmt12(t.at(idx)) << "\n";
    }
    out << "delta" << d << fmt12(delta(q)) << "\n";
    const double total = t.sum();
    out << "sum" << d << fmt12(total) << "\n";
    if (std::abs(total - 1.0) > kAgreementTol) {
        err << "normalization breach: table sums to " << fmt12(total) << "\n";
        return kInvariantBreach;
    }
    return kOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const char d = cfg.delimiter;
    if (cfg.steps < 2) {
        throw std::invalid_argument("sweep needs at least 2 steps");
    }
    if (!std::isfinite(cfg.theta_min_deg) || !std::isfinite(cfg.theta_max_deg) ||
        cfg.theta_min_deg >= cfg.theta_max_deg) {
        throw std::invalid_argument("sweep needs a nondegenerate theta range");
    }
    out << "# theta_deg";
    for (int idx = 0; idx < 16; ++idx) {
        out << d << "P" << SignQuadruple::from_index(idx).str();
    }
    out << d << "delta" << d << "chsh_closed" << d << "chsh_dot" << d << "chsh_master\n";

    for (int i = 0; i < cfg.steps; ++i) {
        const double deg = cfg.theta_min_deg + (cfg.theta_max_deg - cfg.theta_min_deg) *
                                                   static_cast<double>(i) /
                                                   static_cast<double>(cfg.steps - 1);
        const double theta = spin_angle_rad(cfg, deg);
        const AxisQuadruple q = coplanar_axes(theta);
        const FourProbTable t_sym = table2(q, Symmetry::symmetric, cfg.backend);
        const FourProbTable t_anti = table2(q, Symmetry::antisymmetric, cfg.backend);
        const FourProbTable& t = cfg.symmetry == Symmetry::symmetric ? t_sym : t_anti;

        const double closed = chsh_closed_form(theta);
        const double dotf = chsh_dot_form(q);
        const double master = chsh_master_form(t_sym, t_anti);

        out << fmt12(deg);
        for (int idx = 0; idx < 16; ++idx) {
            out << d << fmt12(t.at(idx));
        }
        out << d << fmt12(delta(q)) << d << fmt12(closed) << d << fmt12(dotf) << d << fmt12(master)
            << "\n";

        const double sum = t.sum();
        if (std::abs(sum - 1.0) > kAgreementTol || std::abs(closed - dotf) > kAgreementTol ||
            std::abs(dotf - master) > kAgreementTol) {
            err << "invariant breach at theta=" << fmt12(deg) << " deg: sum=" << fmt12(sum)
                << " closed=" << fmt12(closed) << " dot=" << fmt12(dotf)
                << " master=" << fmt12(master) << "\n";
            return kInvariantBreach;
        }
    }
    return kOk;
}

int run_chsh(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const char d = cfg.delimiter;
    const AxisQuadruple q = resolve_quadruple(cfg);
    const FourProbTable t_sym = table2(q, Symmetry::symmetric, cfg.backend);
    const FourProbTable t_anti = table2(q, Symmetry::antisymmetric, cfg.backend);
    const double dotf = chsh_dot_form(q);
    const double master = chsh_master_form(t_sym, t_anti);
    double max_disagreement = std::abs(dotf - master);

    if (cfg.coplanar_theta_deg) {
        const double theta = spin_angle_rad(cfg, *cfg.coplanar_theta_deg);
        const double closed = chsh_closed_form(theta);
        out << "theta_deg" << d << fmt12(*cfg.coplanar_theta_deg) << "\n";
        out << "chsh_closed" << d << fmt12(closed) << "\n";
        max_disagreement = std::max(max_disagreement, std::abs(closed - dotf));
    }
    out << "chsh_dot" << d << fmt12(dotf) << "\n";
    out << "chsh_master" << d << fmt12(master) << "\n";
    out << "bound" << d << "2\n";
    out << "violates_bound" << d << (std::abs(dotf) > 2.0 + kAgreementTol ? "true" : "false")
        << "\n";
    if (max_disagreement > kAgreementTol) {
        err << "agreement breach: max disagreement " << fmt12(max_disagreement) << "\n";
        return kInvariantBreach;
    }
    return kOk;
}

int run_lhv(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const char d = cfg.delimiter;
    const LhvStrategy strategy = parse_strategy(cfg.strategy);
    const LhvEstimate est = simulate_lhv(strategy, cfg.trials, cfg.seed, cfg.threads, cfg.backend);
    out << "# lhv report\n";
    out << "strategy" << d << cfg.strategy << "\n";
    out << "trials" << d << cfg.trials << "\n";
    out << "seed" << d << cfg.seed << "\n";
    for (int ka = 0; ka < 2; ++ka) {
        for (int kb = 0; kb < 2; ++kb) {
            out << "C" << (ka + 1) << (kb + 1) << d << fmt12(est.c(ka, kb)) << d
                << "se=" << fmt12(est.se(ka, kb)) << d << "n=" << est.pair_trials(ka, kb) << "\n";
        }
    }
    const double chsh = est.chsh();
    const double limit = 2.0 + 5.0 * est.chsh_se();
    out << "chsh" << d << fmt12(chsh) << "\n";
    out << "chsh_se" << d << fmt12(est.chsh_se()) << "\n";
    out << "limit" << d << fmt12(limit) << "\n";
    out << "verdict" << d << (std::abs(chsh) <= limit ? "PASS" : "FAIL") << "\n";
    return kOk;
}

int run_audit(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const char d = cfg.delimiter;
    const std::string& name = cfg.audit_name;
    if (name != "bell64" && name != "stapp71" && name != "stapp85" && name != "bell71" &&
        name != "chsh-signed") {
        throw std::invalid_argument("unknown audit: " + name +
                                    " (expected bell64|stapp71|stapp85|bell71|chsh-signed)");
    }
    out << "# audit" << d << name << "\n";
    if (name == "bell64") {
        audits::SignedDensity positive;
        positive.weights = {0.25, 0.25, 0.25, 0.25};
        positive.outcomes = {{1, 1, 1}, {1, -1, 1}, {-1, 1, -1}, {1, 1, -1}};
        print_report(out, audits::bell64_audit(positive), "nonnegative", d);
        print_report(out, audits::bell64_signed_instance(), "signed", d);
    } else if (name == "stapp71") {
        print_report(out, audits::stapp71_audit(500.0, 500.0), "nonnegative", d);
        print_report(out, audits::stapp71_audit(1300.0, -300.0), "signed", d);
    } else if (name == "stapp85") {
        out << "summand_values";
        for (const auto& [value, count] : audits::stapp85_summand_values()) {
            out << d << fmt12(value) << "(x" << count << ")";
        }
        out << "\n";
        print_report(out, audits::stapp85_audit(100.0, 0.0, 0.0), "nonnegative", d);
        print_report(out, audits::stapp85_audit(130.0, -30.0, 0.0), "signed", d);
    } else if (name == "bell71") {
        const audits::AuditReport r = audits::bell71_audit();
        out << "max_abs_gamma" << d << fmt12(r.lhs) << "\n";
        print_report(out, r, "grid", d);
    } else if (name == "chsh-signed") {
        print_report(out, audits::chsh_signed_audit(600, 400), "nonnegative", d);
        print_report(out, audits::chsh_signed_audit(1100, -100), "signed", d);
    }
    return kOk;
}

int run_bell(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const char d = cfg.delimiter;
    Axis a = Axis::from_planar_angle(spin_angle_rad(cfg, cfg.bell_angles_deg[0]));
    Axis b = Axis::from_planar_angle(spin_angle_rad(cfg, cfg.bell_angles_deg[1]));
    Axis c = Axis::from_planar_angle(spin_angle_rad(cfg, cfg.bell_angles_deg[2]));
    if (cfg.bell_axes) {
        a = (*cfg.bell_axes)[0];
        b = (*cfg.bell_axes)[1];
        c = (*cfg.bell_axes)[2];
    }
    const BellCheck r = bell_inequality_check(a, b, c);
    out << "p_ab" << d << fmt12(r.p_ab) << "\n";
    out << "p_ac" << d << fmt12(r.p_ac) << "\n";
    out << "p_cb" << d << fmt12(r.p_cb) << "\n";
    out << "lhs" << d << fmt12(r.lhs) << "\n";
    out << "rhs" << d << fmt12(r.rhs) << "\n";
    out << "violated" << d << (r.violated ? "true" : "false") << "\n";
    return kOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.subcommand == "table") {
            return run_table(cfg, out, err);
        }
        if (cfg.subcommand == "sweep") {
            return run_sweep(cfg, out, err);
        }
        if (cfg.subcommand == "chsh") {
            return run_chsh(cfg, out, err);
        }
        if (cfg.subcommand == "lhv") {
            return run_lhv(cfg, out, err);
        }
        if (cfg.subcommand == "audit") {
            return run_audit(cfg, out, err);
        }
        if (cfg.subcommand == "bell") {
            return run_bell(cfg, out, err);
        }
        throw std::invalid_argument("unknown subcommand: " + cfg.subcommand);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }
}

} // namespace qbell::cli
