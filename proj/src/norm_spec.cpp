#include "critnorm/norm_spec.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace critnorm {

namespace {

std::map<std::string, double> parse_kv(const std::string& body, const std::string& full) {
    std::map<std::string, double> kv;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParameterError("norm spec '" + full + "': bad token '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        double x;
        if (val == "inf" || val == "Inf" || val == "INF") {
            x = std::numeric_limits<double>::infinity();
        } else {
            try {
                size_t pos = 0;
                x = std::stod(val, &pos);
                if (pos != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw ParameterError("norm spec '" + full + "': bad value '" + val + "'");
            }
        }
        if (!kv.emplace(key, x).second)
            throw ParameterError("norm spec '" + full + "': duplicate key '" + key + "'");
    }
    return kv;
}

double take(std::map<std::string, double>& kv, const std::string& key, const std::string& full) {
    auto it = kv.find(key);
    if (it == kv.end())
        throw ParameterError("norm spec '" + full + "': missing key '" + key + "'");
    const double v = it->second;
    kv.erase(it);
    return v;
}

void expect_empty(const std::map<std::string, double>& kv, const std::string& full) {
    if (!kv.empty())
        throw ParameterError("norm spec '" + full + "': unknown key '" + kv.begin()->first + "'");
}

std::string num(double x) {
    if (std::isinf(x)) return "inf";
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

NormSpec NormSpec::besov(double s, double p, double q) {
    NormSpec n;
    n.family = Family::Besov;
    n.s = s; n.p = p; n.q = q;
    n.validate();
    return n;
}
NormSpec NormSpec::aniso(double s1, double p, double q1, double s2, double q2) {
    NormSpec n;
    n.family = Family::AnisoBesov;
    n.s = s1; n.p = p; n.q = q1; n.s2 = s2; n.q2 = q2;
    n.validate();
    return n;
}
NormSpec NormSpec::sobolev_aniso(double s, double sp) {
    NormSpec n;
    n.family = Family::SobolevAniso;
    n.s = s; n.sp = sp;
    return n;
}
NormSpec NormSpec::sobolev_iso(double s) {
    NormSpec n;
    n.family = Family::SobolevIso;
    n.s = s;
    return n;
}
NormSpec NormSpec::htheta(double theta) {
    NormSpec n;
    n.family = Family::HTheta;
    n.theta = theta;
    n.validate();
    return n;
}
NormSpec NormSpec::heat_sigma(double sigma) {
    NormSpec n;
    n.family = Family::HeatBesov;
    n.sigma = sigma;
    n.validate();
    return n;
}
NormSpec NormSpec::heat_p(double p) {
    if (!(p > 1.0)) throw ParameterError("heat norm: p must exceed 1");
    return heat_sigma(2.0 - 2.0 / p);
}
NormSpec NormSpec::lebesgue(double p) {
    NormSpec n;
    n.family = Family::Lebesgue;
    n.p = p;
    n.validate();
    return n;
}

void NormSpec::validate() const {
    auto check_lp = [](double e, const char* what) {
        if (!std::isinf(e) && !(e >= 1.0))
            throw ParameterError(std::string(what) + " exponent must be >= 1 or inf");
    };
    switch (family) {
        case Family::Besov:
            check_lp(p, "Besov p");
            check_lp(q, "Besov q");
            break;
        case Family::AnisoBesov:
            check_lp(p, "AnisoBesov p");
            check_lp(q, "AnisoBesov q1");
            check_lp(q2, "AnisoBesov q2");
            break;
        case Family::HTheta:
            if (!(theta > 0.0 && theta < 0.5))
                throw ParameterError("H_theta: theta must lie in (0,1/2)");
            break;
        case Family::HeatBesov:
            if (!(sigma > 0.0)) throw ParameterError("heat norm: sigma must be positive");
            break;
        case Family::Lebesgue:
            check_lp(p, "Lebesgue p");
            break;
        default:
            break;
    }
}

NormSpec NormSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParameterError("norm spec '" + text + "': expected '<family>:<key=value,...>'");
    const std::string fam = text.substr(0, colon);
    auto kv = parse_kv(text.substr(colon + 1), text);
    NormSpec n;
    if (fam == "besov") {
        n = besov(take(kv, "s", text), take(kv, "p", text), take(kv, "q", text));
    } else if (fam == "aniso") {
        n = aniso(take(kv, "s1", text), take(kv, "p", text), take(kv, "q1", text),
                  take(kv, "s2", text), take(kv, "q2", text));
    } else if (fam == "hss") {
        n = sobolev_aniso(take(kv, "s", text), take(kv, "sp", text));
    } else if (fam == "hs") {
        n = sobolev_iso(take(kv, "s", text));
    } else if (fam == "htheta") {
        n = htheta(take(kv, "theta", text));
    } else if (fam == "heat") {
        if (kv.count("sigma"))
            n = heat_sigma(take(kv, "sigma", text));
        else
            n = heat_p(take(kv, "p", text));
    } else if (fam == "leb") {
        n = lebesgue(take(kv, "p", text));
    } else {
        throw ParameterError("norm spec '" + text + "': unknown family '" + fam + "'");
    }
    expect_empty(kv, text);
    return n;
}

std::string NormSpec::str() const {
    switch (family) {
        case Family::Besov:
            return "besov:s=" + num(s) + ",p=" + num(p) + ",q=" + num(q);
        case Family::AnisoBesov:
            return "aniso:s1=" + num(s) + ",p=" + num(p) + ",q1=" + num(q) + ",s2=" + num(s2) +
                   ",q2=" + num(q2);
        case Family::SobolevAniso:
            return "hss:s=" + num(s) + ",sp=" + num(sp);
        case Family::SobolevIso:
            return "hs:s=" + num(s);
        case Family::HTheta:
            return "htheta:theta=" + num(theta);
        case Family::HeatBesov:
            return "heat:sigma=" + num(sigma);
        case Family::Lebesgue:
            return "leb:p=" + num(p);
    }
    return "";
}

} // namespace critnorm
