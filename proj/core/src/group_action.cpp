#include "lie_euler/group_action.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace lie_euler {

StatePoint apply_point(int i, double s, const StatePoint& pt) {
  StatePoint r = pt;
  const double cs = std::cos(s), sn = std::sin(s);
  switch (i) {
    case 1: r.x += s; break;
    case 2: r.y += s; break;
    case 3: r.z += s; break;
    case 4: r.t += s; break;
    case 5:
      r.x += s * pt.t;
      r.u += s;
      break;
    case 6:
      r.y += s * pt.t;
      r.v += s;
      break;
    case 7:
      r.z += s * pt.t;
      r.w += s;
      break;
    case 8:
      r.t = std::exp(s) * pt.t;
      r.u = std::exp(-s) * pt.u;
      r.v = std::exp(-s) * pt.v;
      r.w = std::exp(-s) * pt.w;
      r.q = std::exp(2 * s) * pt.q;
      break;
    case 9:
      r.x = std::exp(s) * pt.x;
      r.y = std::exp(s) * pt.y;
      r.z = std::exp(s) * pt.z;
      r.u = std::exp(s) * pt.u;
      r.v = std::exp(s) * pt.v;
      r.w = std::exp(s) * pt.w;
      r.q = std::exp(-2 * s) * pt.q;
      break;
    case 10:
      r.x = pt.x * cs + pt.y * sn;
      r.y = pt.y * cs - pt.x * sn;
      r.u = pt.v * sn + pt.u * cs;
      r.v = pt.v * cs - pt.u * sn;
      break;
    case 11:
      r.y = pt.y * cs - pt.z * sn;
      r.z = pt.z * cs + pt.y * sn;
      r.v = pt.v * cs - pt.w * sn;
      r.w = pt.w * cs + pt.v * sn;
      break;
    case 12:
      r.x = pt.x * cs - pt.z * sn;
      r.z = pt.x * sn + pt.z * cs;
      r.u = pt.u * cs - pt.w * sn;
      r.w = pt.w * cs + pt.u * sn;
      break;
    case 13:
      r.p = std::exp(s) * pt.p;
      r.q = std::exp(s) * pt.q;
      break;
    default: throw std::invalid_argument("generator index out of range");
  }
  return r;
}

double flow_check(int i, const StatePoint& pt, double s, double step) {
  const VectorField& gen = standard_generators()[static_cast<std::size_t>(i - 1)];
  std::array<double, 9> state = pt.as_array();
  auto rhs = [&](const std::array<double, 9>& y) { return evaluate(gen, y); };
  auto axpy = [](const std::array<double, 9>& y, double a, const std::array<double, 9>& d) {
    std::array<double, 9> out;
    for (int k = 0; k < 9; ++k) out[static_cast<std::size_t>(k)] = y[static_cast<std::size_t>(k)] + a * d[static_cast<std::size_t>(k)];
    return out;
  };
  const double dir = (s >= 0) ? 1.0 : -1.0;
  const double total = std::abs(s);
  double done = 0.0;
  while (done < total) {
    double h = std::min(step, total - done) * dir;
    auto k1 = rhs(state);
    auto k2 = rhs(axpy(state, h / 2, k1));
    auto k3 = rhs(axpy(state, h / 2, k2));
    auto k4 = rhs(axpy(state, h, k3));
    for (int k = 0; k < 9; ++k) {
      auto j = static_cast<std::size_t>(k);
      state[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    }
    done += std::abs(h);
  }
  StatePoint closed = apply_point(i, s, pt);
  auto ca = closed.as_array();
  double dev = 0.0;
  for (int k = 0; k < 9; ++k)
    dev = std::max(dev, std::abs(state[static_cast<std::size_t>(k)] - ca[static_cast<std::size_t>(k)]));
  return dev;
}

double group_law_check(int i, double s1, double s2, const StatePoint& pt) {
  auto a = apply_point(i, s1, apply_point(i, s2, pt)).as_array();
  auto b = apply_point(i, s1 + s2, pt).as_array();
  double dev = 0.0;
  for (int k = 0; k < 9; ++k)
    dev = std::max(dev, std::abs(a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)]));
  return dev;
}

std::array<double, 5> SolutionField::sample(double t, double x, double y, double z) const {
  const double c[4] = {t, x, y, z};
  for (int a = 0; a < 4; ++a) {
    if (c[a] < domain[static_cast<std::size_t>(a)].first || c[a] > domain[static_cast<std::size_t>(a)].second)
      throw DomainExceeded("domain exceeded");
  }
  return eval(t, x, y, z);
}

TransformSpec TransformSpec::single(int i, double parameter) {
  if (i < 1 || i > kAlgebraDim) throw std::invalid_argument("generator index out of range");
  TransformSpec spec;
  spec.generator = i;
  if (i == 8 || i == 9 || i == 13) {
    if (parameter == 0.0) throw std::invalid_argument("scale must be nonzero");
    spec.lambda = parameter;
  } else {
    spec.s = parameter;
  }
  return spec;
}

TransformSpec TransformSpec::composite_family(const std::array<double, 6>& c, double s) {
  if (c[0] == 0.0 || c[1] == 0.0 || c[5] == 0.0)
    throw std::invalid_argument("c1, c2, c6 must be nonzero");
  TransformSpec spec;
  spec.composite = true;
  spec.c = c;
  spec.s = s;
  return spec;
}

TransformSpec TransformSpec::from_json(const nlohmann::json& j) {
  if (j.contains("composite")) {
    const auto& cj = j.at("composite");
    std::array<double, 6> c{};
    auto arr = cj.at("c");
    if (arr.size() != 6) throw std::invalid_argument("composite needs 6 constants");
    for (std::size_t i = 0; i < 6; ++i) c[i] = arr.at(i).get<double>();
    return composite_family(c, cj.at("s").get<double>());
  }
  int i = j.at("generator").get<int>();
  double parameter;
  if (i == 8 || i == 9 || i == 13) {
    parameter = j.contains("lambda") ? j.at("lambda").get<double>() : std::exp(j.at("s").get<double>());
  } else {
    parameter = j.at("s").get<double>();
  }
  return single(i, parameter);
}

nlohmann::json TransformSpec::to_json() const {
  nlohmann::json j;
  if (composite) {
    j["composite"] = {{"c", c}, {"s", s}};
  } else {
    j["generator"] = generator;
    if (generator == 8 || generator == 9 || generator == 13)
      j["lambda"] = lambda;
    else
      j["s"] = s;
  }
  return j;
}

namespace {

SolutionField transform_single(int i, double s, double lambda, const SolutionField& f) {
  SolutionField g = f;
  g.name = f.name + "|g" + std::to_string(i);
  g.analytic_residual = nullptr;  // residual closure does not transport
  const double cs = std::cos(s), sn = std::sin(s);
  // Pullback rules; sampling goes through f.sample for the domain check.
  switch (i) {
    case 1:
      g.eval = [f, s](double t, double x, double y, double z) { return f.sample(t, x + s, y, z); };
      break;
    case 2:
      g.eval = [f, s](double t, double x, double y, double z) { return f.sample(t, x, y + s, z); };
      break;
    case 3:
      g.eval = [f, s](double t, double x, double y, double z) { return f.sample(t, x, y, z + s); };
      break;
    case 4:
      g.eval = [f, s](double t, double x, double y, double z) { return f.sample(t + s, x, y, z); };
      break;
    case 5:
      g.eval = [f, s](double t, double x, double y, double z) {
        auto r = f.sample(t, x + s * t, y, z);
        r[0] -= s;
        return r;
      };
      break;
    case 6:
      g.eval = [f, s](double t, double x, double y, double z) {
        auto r = f.sample(t, x, y + s * t, z);
        r[1] -= s;
        return r;
      };
      break;
    case 7:
      g.eval = [f, s](double t, double x, double y, double z) {
        auto r = f.sample(t, x, y, z + s * t);
        r[2] -= s;
        return r;
      };
      break;
    case 8:
      g.eval = [f, lambda](double t, double x, double y, double z) {
        auto r = f.sample(lambda * t, x, y, z);
        r[0] *= lambda;
        r[1] *= lambda;
        r[2] *= lambda;
        r[4] /= lambda * lambda;
        return r;
      };
      break;
    case 9:
      g.eval = [f, lambda](double t, double x, double y, double z) {
        auto r = f.sample(t, lambda * x, lambda * y, lambda * z);
        r[0] /= lambda;
        r[1] /= lambda;
        r[2] /= lambda;
        r[4] *= lambda * lambda;
        return r;
      };
      break;
    case 10:
      g.eval = [f, cs, sn](double t, double x, double y, double z) {
        auto r = f.sample(t, x * cs + y * sn, y * cs - x * sn, z);
        double u = r[0], v = r[1];
        r[0] = cs * u - sn * v;
        r[1] = sn * u + cs * v;
        return r;
      };
      break;
    case 11:
      g.eval = [f, cs, sn](double t, double x, double y, double z) {
        auto r = f.sample(t, x, y * cs - z * sn, z * cs + y * sn);
        double v = r[1], w = r[2];
        r[1] = cs * v + sn * w;
        r[2] = cs * w - sn * v;
        return r;
      };
      break;
    case 12:
      g.eval = [f, cs, sn](double t, double x, double y, double z) {
        auto r = f.sample(t, x * cs - z * sn, y, x * sn + z * cs);
        double u = r[0], w = r[2];
        r[0] = cs * u + sn * w;
        r[2] = cs * w - sn * u;
        return r;
      };
      break;
    case 13:
      g.eval = [f, lambda](double t, double x, double y, double z) {
        auto r = f.sample(t, x, y, z);
        r[3] *= lambda;
        r[4] *= lambda;
        return r;
      };
      break;
    default: throw std::invalid_argument("generator index out of range");
  }
  return g;
}

}  // namespace

SolutionField transform_solution(const TransformSpec& spec, const SolutionField& f) {
  if (!spec.composite) return transform_single(spec.generator, spec.s, spec.lambda, f);
  // Outermost-first composition; the resulting coordinate map scales by c2^s
  // and rotates by conclusion2_rotation, matching the published composite.
  SolutionField g = transform_single(13, 0.0, std::pow(spec.c[5], -spec.s), f);
  g = transform_single(12, spec.c[4] * spec.s, 1.0, g);
  g = transform_single(11, spec.c[3] * spec.s, 1.0, g);
  g = transform_single(10, spec.c[2] * spec.s, 1.0, g);
  g = transform_single(9, 0.0, std::pow(spec.c[1], spec.s), g);
  g = transform_single(8, 0.0, std::pow(spec.c[0], spec.s), g);
  g.name = f.name + "|composite";
  return g;
}

Eigen::Matrix3d conclusion2_rotation(double c3, double c4, double c5, double s) {
  auto m10 = [](double a) {
    Eigen::Matrix3d m;
    m << std::cos(a), std::sin(a), 0, -std::sin(a), std::cos(a), 0, 0, 0, 1;
    return m;
  };
  auto m11 = [](double a) {
    Eigen::Matrix3d m;
    m << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
    return m;
  };
  auto m12 = [](double a) {
    Eigen::Matrix3d m;
    m << std::cos(a), 0, -std::sin(a), 0, 1, 0, std::sin(a), 0, std::cos(a);
    return m;
  };
  return m12(c5 * s) * m11(c4 * s) * m10(c3 * s);
}

namespace {

constexpr double kBigBox = 1e6;

SolutionField make_field(std::string name, SolutionField::Evaluator eval,
                         SolutionField::ResidualFn res = nullptr) {
  SolutionField f;
  f.name = std::move(name);
  f.eval = std::move(eval);
  f.analytic_residual = std::move(res);
  for (auto& b : f.domain) b = {-kBigBox, kBigBox};
  return f;
}

std::array<double, 5> zero_residual(double, double, double, double, double) {
  return {0, 0, 0, 0, 0};
}

}  // namespace

SolutionField constant_state() {
  return make_field("constant",
                    [](double, double, double, double) { return std::array<double, 5>{0, 0, 0, 1, 1}; },
                    zero_residual);
}

SolutionField uniform_flow(double u0, double v0, double w0, double p0, double q0) {
  return make_field("uniform",
                    [=](double, double, double, double) {
                      return std::array<double, 5>{u0, v0, w0, p0, q0};
                    },
                    zero_residual);
}

SolutionField stratified_state(double p0) {
  return make_field("stratified",
                    [=](double, double x, double, double) {
                      return std::array<double, 5>{0, 0, 0, p0, 1 + x * x / 10};
                    },
                    zero_residual);
}

SolutionField control_quadratic() {
  return make_field("control_quadratic", [](double, double x, double, double) {
    return std::array<double, 5>{x * x, 0, 0, 1, 1};
  });
}

SolutionField control_trig() {
  auto eval = [](double t, double x, double y, double z) {
    return std::array<double, 5>{
        std::sin(2 * x) + std::cos(2 * t),
        std::sin(2 * y) + std::cos(2 * z),
        std::sin(2 * z) + std::cos(2 * x),
        std::sin(2 * t) + std::sin(2 * x) + std::cos(2 * y) + std::sin(2 * z),
        3 + 0.5 * std::sin(2 * x) + 0.5 * std::cos(2 * t)};
  };
  auto res = [eval](double t, double x, double y, double z, double gamma) {
    auto f = eval(t, x, y, z);
    double u = f[0], v = f[1], w = f[2], p = f[3], q = f[4];
    double ut = -2 * std::sin(2 * t), ux = 2 * std::cos(2 * x), uy = 0, uz = 0;
    double vt = 0, vx = 0, vy = 2 * std::cos(2 * y), vz = -2 * std::sin(2 * z);
    double wt = 0, wx = -2 * std::sin(2 * x), wy = 0, wz = 2 * std::cos(2 * z);
    double pt = 2 * std::cos(2 * t), px = 2 * std::cos(2 * x), py = -2 * std::sin(2 * y),
           pz = 2 * std::cos(2 * z);
    double qt = -std::sin(2 * t), qx = std::cos(2 * x), qy = 0, qz = 0;
    double div = ux + vy + wz;
    return std::array<double, 5>{
        ut + u * ux + v * uy + w * uz + px / q,
        vt + u * vx + v * vy + w * vz + py / q,
        wt + u * wx + v * wy + w * wz + pz / q,
        qt + q * div + u * qx + v * qy + w * qz,
        pt + gamma * p * div + u * px + v * py + w * pz};
  };
  return make_field("control_trig", eval, res);
}

}  // namespace lie_euler
