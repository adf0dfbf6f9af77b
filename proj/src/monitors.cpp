#include "critnorm/monitors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace critnorm {

namespace {

std::map<std::string, std::string> parse_opts(const std::string& body, const std::string& full) {
    std::map<std::string, std::string> kv;
    if (body.empty()) return kv;
    std::stringstream ss(body);
    std::string item;
    std::string pending_key;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            // continuation of a vector value, e.g. e=0,0,1
            if (pending_key.empty())
                throw ParameterError("monitor spec '" + full + "': bad token '" + item + "'");
            kv[pending_key] += "," + item;
            continue;
        }
        pending_key = item.substr(0, eq);
        if (kv.count(pending_key))
            throw ParameterError("monitor spec '" + full + "': duplicate key '" + pending_key + "'");
        kv[pending_key] = item.substr(eq + 1);
    }
    return kv;
}

double to_num(const std::string& s, const std::string& full) {
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParameterError("monitor spec '" + full + "': bad number '" + s + "'");
    }
}

} // namespace

void MonitorSpec::validate() const {
    if (kind == Kind::CriterionIntegral || kind == Kind::GronwallEnvelope) {
        if (!(p > 4.0 && p < 6.0))
            throw ParameterError("monitor: p must lie in (4,6)");
        const double en = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
        if (std::abs(en - 1.0) > 1e-12)
            throw ParameterError("monitor: direction e must be a unit vector");
    }
    if (kind == Kind::HThetaEnergy || kind == Kind::D3sqHTheta) {
        if (!(theta > 0.5 - 2.0 / p && theta < 1.0 / 6.0))
            throw ParameterError("monitor: theta must lie in (1/2-2/p, 1/6)");
    }
    if (kind == Kind::EndpointBp) {
        if (!(p > 1.0)) throw ParameterError("monitor: endpoint-bp needs p > 1");
    }
    if (kind == Kind::GronwallEnvelope && !(C > 0.0))
        throw ParameterError("monitor: gronwall constant C must be positive");
}

MonitorSpec MonitorSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    auto kv = parse_opts(colon == std::string::npos ? "" : text.substr(colon + 1), text);

    MonitorSpec m;
    if (name == "criterion") m.kind = Kind::CriterionIntegral;
    else if (name == "vorticity-l32") m.kind = Kind::VorticityL32;
    else if (name == "omega34-energy") m.kind = Kind::Omega34Energy;
    else if (name == "htheta") m.kind = Kind::HThetaEnergy;
    else if (name == "d3sq-htheta") m.kind = Kind::D3sqHTheta;
    else if (name == "endpoint-bp") m.kind = Kind::EndpointBp;
    else if (name == "bkm-sup") m.kind = Kind::BKMSupNorm;
    else if (name == "energy") m.kind = Kind::EnergyBalance;
    else if (name == "klips") m.kind = Kind::KlipsBalance;
    else if (name == "gronwall") m.kind = Kind::GronwallEnvelope;
    else throw ParameterError("monitor spec '" + text + "': unknown monitor '" + name + "'");

    for (auto& [k, v] : kv) {
        if (k == "p") m.p = to_num(v, text);
        else if (k == "theta") m.theta = to_num(v, text);
        else if (k == "C") m.C = to_num(v, text);
        else if (k == "e") {
            std::stringstream es(v);
            std::string c;
            int i = 0;
            while (std::getline(es, c, ',') && i < 3) m.e[i++] = to_num(c, text);
            if (i != 3) throw ParameterError("monitor spec '" + text + "': e needs 3 components");
        } else {
            throw ParameterError("monitor spec '" + text + "': unknown key '" + k + "'");
        }
    }
    m.validate();
    return m;
}

std::string MonitorSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::CriterionIntegral:
            os << "criterion:p=" << p << ",e=" << e[0] << "," << e[1] << "," << e[2];
            break;
        case Kind::VorticityL32: os << "vorticity-l32"; break;
        case Kind::Omega34Energy: os << "omega34-energy"; break;
        case Kind::HThetaEnergy: os << "htheta:theta=" << theta; break;
        case Kind::D3sqHTheta: os << "d3sq-htheta:theta=" << theta; break;
        case Kind::EndpointBp: os << "endpoint-bp:p=" << p; break;
        case Kind::BKMSupNorm: os << "bkm-sup"; break;
        case Kind::EnergyBalance: os << "energy"; break;
        case Kind::KlipsBalance: os << "klips"; break;
        case Kind::GronwallEnvelope: os << "gronwall:C=" << C << ",p=" << p; break;
    }
    return os.str();
}

std::vector<std::string> MonitorSpec::value_names() const {
    switch (kind) {
        case Kind::CriterionIntegral: return {"criterion_integrand"};
        case Kind::VorticityL32:
            return {"omega_l32", "omega34_l2", "grad_omega34_l2"};
        case Kind::Omega34Energy: return {"grad_omega34_l2_sq", "omega34_l2_sq"};
        case Kind::HThetaEnergy:
            return {"d3v3_htheta", "grad_d3v3_htheta", "d33v3_htheta"};
        case Kind::D3sqHTheta: return {"d33v3_htheta_sq"};
        case Kind::EndpointBp: return {"sum_bp_p", "max_bp"};
        case Kind::BKMSupNorm: return {"omega_linf"};
        case Kind::EnergyBalance: return {"half_l2_sq", "grad_l2_sq"};
        case Kind::KlipsBalance:
            return {"sum_omega34_l2_sq", "sum_grad_omega34_l2_sq", "sum_forcing"};
        case Kind::GronwallEnvelope: return {"criterion_integrand"};
    }
    return {};
}

void MonitorSeries::append(double t, std::vector<double> row) {
    if (!times.empty() && t <= times.back())
        throw ParameterError("monitor series: times must be strictly increasing");
    double integ = running_integral.empty() ? 0.0 : running_integral.back();
    if (!times.empty() && !row.empty())
        integ += 0.5 * (t - times.back()) * (row[0] + values.back()[0]);
    times.push_back(t);
    values.push_back(std::move(row));
    running_integral.push_back(integ);
}

void MonitorSeries::write_csv(const std::string& path) const {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw ParameterError("monitor: cannot open '" + path + "'");
    os << "time";
    for (const auto& n : spec.value_names()) os << "," << n;
    os << ",running_integral\n";
    char buf[32];
    auto emit = [&](double x) {
        std::snprintf(buf, sizeof buf, "%.17g", x);
        os << buf;
    };
    for (std::size_t i = 0; i < times.size(); ++i) {
        emit(times[i]);
        for (double x : values[i]) {
            os << ",";
            emit(x);
        }
        os << ",";
        emit(running_integral[i]);
        os << "\n";
    }
}

double criterion_integrand(const VelocityState& v, const std::array<double, 3>& e, double p) {
    SpectralField ve = dot_component(v, e);
    const double n = norm(ve, NormSpec::sobolev_iso(0.5 + 2.0 / p));
    return std::pow(n, p);
}

std::array<double, 3> vorticity_monitors(const VelocityState& v) {
    VorticityState w = compute_vorticity(v);
    PhysicalField o1 = to_physical(w.Omega[0]);
    PhysicalField o2 = to_physical(w.Omega[1]);
    PhysicalField o3 = to_physical(w.Omega[2]);
    PhysicalField mag(v.grid_ptr(), (o1.values().square() + o2.values().square() +
                                     o3.values().square()).sqrt());
    const double l32 = lp_norm(mag, 1.5);
    const double om34 = std::sqrt(integral(PhysicalField(
        v.grid_ptr(), o3.values().abs().pow(1.5))));
    const double grad34 = std::sqrt(grad_signed_power34_sq_integral(w.omega_h));
    return {l32, om34, grad34};
}

std::array<double, 3> htheta_monitors(const VelocityState& v, double theta) {
    if (!(theta > 0.0 && theta < 0.5))
        throw ParameterError("htheta_monitors: theta must lie in (0,1/2)");
    SpectralField g = derivative(v.v[2], 2);
    const NormSpec spec = NormSpec::htheta(theta);
    return {norm(g, spec), grad_norm(g, spec), norm(derivative(g, 2), spec)};
}

std::array<std::array<double, 3>, 3> endpoint_bp(const VelocityState& v,
                                                 const std::array<std::array<double, 3>, 3>& p) {
    std::array<std::array<double, 3>, 3> out{};
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            if (!(p[k][l] > 1.0)) throw ParameterError("endpoint_bp: exponents must exceed 1");
            out[k][l] = norm(derivative(v.v[k], l), NormSpec::heat_p(p[k][l]));
        }
    return out;
}

std::vector<double> evaluate_monitor(const MonitorSpec& spec, const VelocityState& v) {
    switch (spec.kind) {
        case MonitorSpec::Kind::CriterionIntegral:
            return {criterion_integrand(v, spec.e, spec.p)};
        case MonitorSpec::Kind::VorticityL32: {
            auto m = vorticity_monitors(v);
            return {m[0], m[1], m[2]};
        }
        case MonitorSpec::Kind::Omega34Energy: {
            // the budget pair; the gradient square first so the running
            // integral accumulates int ||grad omega_{3/4}||^2 dt
            auto m = vorticity_monitors(v);
            return {m[2] * m[2], m[1] * m[1]};
        }
        case MonitorSpec::Kind::HThetaEnergy: {
            auto m = htheta_monitors(v, spec.theta);
            return {m[0], m[1], m[2]};
        }
        case MonitorSpec::Kind::D3sqHTheta: {
            const double n = htheta_monitors(v, spec.theta)[2];
            return {n * n};
        }
        case MonitorSpec::Kind::BKMSupNorm: {
            VorticityState w = compute_vorticity(v);
            PhysicalField o1 = to_physical(w.Omega[0]);
            PhysicalField o2 = to_physical(w.Omega[1]);
            PhysicalField o3 = to_physical(w.Omega[2]);
            RealArray mag = (o1.values().square() + o2.values().square() +
                             o3.values().square()).sqrt();
            return {mag.size() ? mag.maxCoeff() : 0.0};
        }
        case MonitorSpec::Kind::EndpointBp: {
            std::array<std::array<double, 3>, 3> pm;
            for (auto& row : pm) row = {spec.p, spec.p, spec.p};
            auto m = endpoint_bp(v, pm);
            double sum = 0.0, mx = 0.0;
            for (auto& row : m)
                for (double x : row) {
                    sum += std::pow(x, spec.p);
                    mx = std::max(mx, x);
                }
            return {sum, mx};
        }
        case MonitorSpec::Kind::EnergyBalance:
            return {energy_half_l2sq(v), enstrophy_gradsq(v)};
        case MonitorSpec::Kind::KlipsBalance: {
            VorticityState w = compute_vorticity(v);
            double sum34 = 0.0, sumgrad = 0.0, sumforce = 0.0;
            // forcing f = Omega . grad v per component, paired with (Omega_i)_{1/2}
            PhysicalField op[3] = {to_physical(w.Omega[0]), to_physical(w.Omega[1]),
                                   to_physical(w.Omega[2])};
            for (int i = 0; i < 3; ++i) {
                PhysicalField oi = op[i];
                sum34 += integral(PhysicalField(v.grid_ptr(), oi.values().abs().pow(1.5)));
                sumgrad += grad_signed_power34_sq_integral(w.Omega[i]);
                PhysicalField fi(v.grid_ptr());
                for (int m = 0; m < 3; ++m) {
                    PhysicalField dmv = to_physical(derivative(v.v[i], m));
                    fi.values() += op[m].values() * dmv.values();
                }
                PhysicalField half = signed_power(oi, 0.5);
                sumforce += integral_product(fi, half);
            }
            return {sum34, sumgrad, sumforce};
        }
        case MonitorSpec::Kind::GronwallEnvelope:
            return {criterion_integrand(v, spec.e, spec.p)};
    }
    return {};
}

GronwallReport gronwall_envelope(const MonitorSeries& criterion_series,
                                 const std::vector<double>& omega34_l2, double omega0_l32,
                                 double C, double p, const std::vector<double>& d3v3_htheta,
                                 const std::vector<double>& grad_d3v3_htheta) {
    if (!(C > 0.0)) throw ParameterError("gronwall_envelope: C must be positive");
    if (omega34_l2.size() != criterion_series.times.size())
        throw ParameterError("gronwall_envelope: series length mismatch");
    const bool with_htheta = !d3v3_htheta.empty();
    if (with_htheta && (d3v3_htheta.size() != omega34_l2.size() ||
                        grad_d3v3_htheta.size() != omega34_l2.size()))
        throw ParameterError("gronwall_envelope: companion series length mismatch");
    GronwallReport rep;
    rep.C = C;
    rep.p = p;
    rep.times = criterion_series.times;
    const double prefactor = std::pow(omega0_l32, 0.5 * (p + 3.0));
    double grad_budget = 0.0;
    for (std::size_t i = 0; i < rep.times.size(); ++i) {
        const double I = criterion_series.running_integral[i];
        const double E = std::exp(C * std::exp(C * I));
        const double env = prefactor * E;
        const double meas = std::pow(omega34_l2[i], 2.0 * (p + 3.0) / 3.0);
        rep.envelope.push_back(env);
        rep.measured.push_back(meas);
        rep.margin.push_back(env > 0.0 ? meas / env : 0.0);
        if (meas > env) rep.within_envelope = false;
        if (with_htheta) {
            if (i > 0)
                grad_budget += 0.5 * (rep.times[i] - rep.times[i - 1]) *
                               (grad_d3v3_htheta[i] * grad_d3v3_htheta[i] +
                                grad_d3v3_htheta[i - 1] * grad_d3v3_htheta[i - 1]);
            const double env_h = omega0_l32 * omega0_l32 * E;
            const double meas_h = d3v3_htheta[i] * d3v3_htheta[i] + grad_budget;
            rep.envelope_htheta.push_back(env_h);
            rep.measured_htheta.push_back(meas_h);
            if (meas_h > env_h) rep.within_envelope = false;
        }
    }
    return rep;
}

} // namespace critnorm
