#include "orad/phi.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace orad {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "endpoints=" << (endpoints_ok ? "ok" : "fail") << "(" << format_sig(endpoint_violation, 3) << ")"
     << " monotone=" << (monotone_ok ? "ok" : "fail") << "(" << format_sig(monotone_violation, 3) << ")"
     << " convex=" << (convex_ok ? "ok" : "fail") << "(" << format_sig(convex_violation, 3) << ")";
  return os.str();
}

ValidationReport validate(const std::function<double(double)>& phi, int grid_size, double t_max) {
  if (grid_size < 3) throw DomainError("validation grid needs at least 3 points");
  if (!(t_max > 1.0)) throw DomainError("validation range must extend past 1");
  ValidationReport rep;

  const double f0 = phi(0.0);
  const double f1 = phi(1.0);
  rep.endpoint_violation = std::max(std::abs(f0), std::abs(f1 - 1.0));
  rep.endpoints_ok = rep.endpoint_violation <= 1e-12;

  std::vector<double> t(grid_size), f(grid_size);
  for (int k = 0; k < grid_size; ++k) {
    t[k] = t_max * k / (grid_size - 1);
    f[k] = phi(t[k]);
  }
  for (int k = 0; k + 1 < grid_size; ++k) {
    const double step = f[k + 1] - f[k];
    if (!(step > 0.0)) {
      rep.monotone_ok = false;
      rep.monotone_violation = std::max(rep.monotone_violation, std::isfinite(step) ? -step : INFINITY);
    }
  }
  // Consecutive triples are equally spaced, so t[k] is the midpoint. The slack is
  // scaled by the magnitude of the values to stay meaningful for steep families.
  for (int k = 1; k + 1 < grid_size; ++k) {
    const double chord = 0.5 * (f[k - 1] + f[k + 1]);
    const double excess = f[k] - chord;
    const double slack = tol::validate * std::max(1.0, std::abs(chord));
    if (excess > slack || !std::isfinite(excess)) {
      rep.convex_ok = false;
      rep.convex_violation = std::max(rep.convex_violation, excess);
    }
  }
  return rep;
}

OrliczFunction OrliczFunction::make(std::string descriptor, Eval phi, Eval derivative, int grid_size,
                                    double t_max) {
  const ValidationReport rep = validate(phi, grid_size, t_max);
  if (!rep.passed()) throw DomainError("'" + descriptor + "' is not a normalized convex increasing function: " + rep.summary());
  auto impl = std::make_shared<Impl>();
  impl->descriptor = std::move(descriptor);
  impl->phi = std::move(phi);
  impl->dphi = std::move(derivative);
  OrliczFunction f(impl);
  const double h = std::max(0.5, f.inverse(0.5));  // phi(t) <= t on [0,1]
  impl->constants.half_inverse = h;
  impl->constants.slab_radius = std::sqrt(2.0) / (2.0 * h);
  return f;
}

double OrliczFunction::derivative(double t) const {
  if (impl_->dphi) return impl_->dphi(t);
  const double h = 1e-6 * std::max(1.0, t);
  if (t < h) return (impl_->phi(t + h) - impl_->phi(t)) / h;
  return (impl_->phi(t + h) - impl_->phi(t - h)) / (2.0 * h);
}

double OrliczFunction::inverse(double y) const {
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("phi inverse is only defined on [0, 1]");
  if (y == 0.0) return 0.0;
  if (y == 1.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol::root * 1e-2) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (impl_->phi(mid) < y) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool OrliczFunction::pointwise_le(const OrliczFunction& other, int grid_size) const {
  for (int k = 0; k < grid_size; ++k) {
    const double t = static_cast<double>(k) / (grid_size - 1);
    if ((*this)(t) > other(t) + tol::validate) return false;
  }
  return true;
}

double phi_inverse(const OrliczFunction& phi, double y) { return phi.inverse(y); }

OrliczFunction make_power_phi(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("power family needs p >= 1, got " + format_double(p));
  if (p == 1.0) {
    return OrliczFunction::make("power:p=1", [](double t) { return t; }, [](double) { return 1.0; });
  }
  return OrliczFunction::make(
      "power:p=" + format_double(p), [p](double t) { return std::pow(t, p); },
      [p](double t) { return p * std::pow(t, p - 1.0); });
}

OrliczFunction make_poly_phi(double c1, double c2) {
  if (!(c1 >= 0.0 && c2 >= 0.0) || std::abs(c1 + c2 - 1.0) > 1e-12 || c1 + c2 <= 0.0)
    throw DomainError("poly family needs c1, c2 >= 0 with c1 + c2 = 1");
  return OrliczFunction::make(
      "poly:c1=" + format_double(c1) + ",c2=" + format_double(c2),
      [c1, c2](double t) { return c1 * t + c2 * t * t; }, [c1, c2](double t) { return c1 + 2.0 * c2 * t; });
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, PhiFactory>& registry() {
  static std::map<std::string, PhiFactory> r = [] {
    std::map<std::string, PhiFactory> init;
    init["power"] = [](const std::vector<std::pair<std::string, double>>& kv) {
      if (kv.size() != 1 || kv[0].first != "p") throw ParseError("power family expects exactly p=<float>");
      return make_power_phi(kv[0].second);
    };
    init["poly"] = [](const std::vector<std::pair<std::string, double>>& kv) {
      double c1 = NAN, c2 = NAN;
      for (const auto& [k, v] : kv) {
        if (k == "c1") c1 = v;
        else if (k == "c2") c2 = v;
        else throw ParseError("poly family has unknown parameter '" + k + "'");
      }
      if (std::isnan(c1) || std::isnan(c2)) throw ParseError("poly family expects c1=<float>,c2=<float>");
      return make_poly_phi(c1, c2);
    };
    return init;
  }();
  return r;
}

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ParseError("not a number: '" + std::string(s) + "'");
  return v;
}

}  // namespace

void register_phi_family(const std::string& name, PhiFactory factory) {
  std::lock_guard lock(registry_mutex());
  registry()[name] = std::move(factory);
}

OrliczFunction parse_phi(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) throw ParseError("phi descriptor needs 'family:params', got '" + std::string(descriptor) + "'");
  const std::string family(descriptor.substr(0, colon));
  std::vector<std::pair<std::string, double>> kv;
  std::string_view rest = descriptor.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("phi parameter needs key=value, got '" + std::string(item) + "'");
    kv.emplace_back(std::string(item.substr(0, eq)), parse_number(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  PhiFactory factory;
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(family);
    if (it == registry().end()) throw ParseError("unknown phi family '" + family + "'");
    factory = it->second;
  }
  return factory(kv);
}

std::vector<OrliczFunction> default_phi_set() {
  std::vector<OrliczFunction> out;
  for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) out.push_back(make_power_phi(p));
  out.push_back(make_poly_phi(0.5, 0.5));
  return out;
}

}  // namespace orad
