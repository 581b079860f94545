#include "nczar/limit.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace nczar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac1(double v) {
  double f = v - std::floor(v);
  return (f >= 1.0) ? 0.0 : f;
}

std::string cdesc(Complex z) {
  std::ostringstream os;
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

struct Tally {
  std::string name;
  bool passed = true;
  std::string witness;

  void note(bool ok, const std::string& w) {
    if (!ok && passed) {
      passed = false;
      witness = w;
    }
  }
  CheckResult done() const { return {name, passed, witness}; }
};

}  // namespace

Heis3Z hmul(const Heis3Z& a, const Heis3Z& b) {
  return {a.k + b.k, a.l + b.l, a.m + b.m + a.k * b.l};
}

Heis3Z hinv(const Heis3Z& a) { return {-a.k, -a.l, -a.m + a.k * a.l}; }

Heis3Z hcomm(const Heis3Z& a, const Heis3Z& b) {
  return hmul(hmul(a, b), hmul(hinv(a), hinv(b)));
}

Heis3R hmul(const Heis3R& a, const Heis3R& b) {
  return {a.x + b.x, a.y + b.y, frac1(a.s + b.s + a.x * b.y)};
}

Heis3R hinv(const Heis3R& a) { return {-a.x, -a.y, frac1(-a.s + a.x * a.y)}; }

Heis3R embed(int N, const Heis3Z& a) {
  const double rt = std::sqrt(static_cast<double>(N));
  return {static_cast<double>(a.k) / rt, static_cast<double>(a.l) / rt,
          frac1(static_cast<double>(a.m) / static_cast<double>(N))};
}

double circle_dist(double a, double b) {
  double d = std::abs(frac1(a) - frac1(b));
  return std::min(d, 1.0 - d);
}

double heis_dist(const Heis3R& a, const Heis3R& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y),
                   circle_dist(a.s, b.s)});
}

long long act_index(const Heis3Z& g, long long q) { return q + g.k; }

long long act_phase(const Heis3Z& g, long long q) {
  return g.m - g.l * (q + g.k);
}

Report heisenberg_checks(unsigned seed, int samples) {
  Report rep;
  rep.case_name = "heisenberg";
  rep.N = 0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> u(-10, 10);
  auto rand_el = [&]() { return Heis3Z{u(rng), u(rng), u(rng)}; };

  Tally t_group{"group-axioms"};
  Tally t_comm{"central-commutator"};
  Tally t_act{"action-homomorphism"};
  Tally t_free{"translation-freeness"};

  const Heis3Z e{};
  const Heis3Z phi{1, 0, 0};
  const Heis3Z gamma{0, 1, 0};
  t_comm.note(hcomm(gamma, phi) == Heis3Z{0, 0, -1}, "gamma phi gamma' phi'");

  for (int i = 0; i < samples; ++i) {
    Heis3Z a = rand_el(), b = rand_el(), c = rand_el();
    std::ostringstream os;
    os << "(" << a.k << "," << a.l << "," << a.m << ")";
    std::string w = os.str();

    t_group.note(hmul(hmul(a, b), c) == hmul(a, hmul(b, c)), w);
    t_group.note(hmul(a, hinv(a)) == e && hmul(hinv(a), a) == e, w);
    t_group.note(hmul(a, e) == a && hmul(e, a) == a, w);

    Heis3Z cm = hcomm(a, b);
    t_comm.note(cm.k == 0 && cm.l == 0 && cm.m == a.k * b.l - b.k * a.l, w);
    t_comm.note(hmul(cm, c) == hmul(c, cm), w);

    long long q = u(rng);
    t_act.note(act_index(a, act_index(b, q)) == act_index(hmul(a, b), q), w);
    t_act.note(act_phase(b, q) + act_phase(a, act_index(b, q)) ==
                   act_phase(hmul(a, b), q),
               w);

    t_free.note((hmul(a, b) == b) == (a == e), w);
    if (a != e) {
      bool separated = false;
      for (long long q2 = -5; q2 <= 5; ++q2) {
        if (act_index(a, q2) != q2 || act_phase(a, q2) != 0) separated = true;
      }
      t_free.note(separated, w);
    }
  }

  rep.checks = {t_group.done(), t_comm.done(), t_act.done(), t_free.done()};
  return rep;
}

HausdorffReport hausdorff_report(int N, double grid_step, double r,
                                 unsigned seed) {
  HausdorffReport rep;
  rep.N = N;
  rep.grid_step = grid_step;
  rep.r = r;
  const double rt = std::sqrt(static_cast<double>(N));
  rep.k_N = std::llround(r * rt);
  rep.step_error = std::abs(static_cast<double>(rep.k_N) / rt - r);
  rep.bound_group = 2.0 / rt + 0.02;
  rep.bound_graph = 3.0 / rt + 0.02;

  auto nearest = [&](const Heis3R& u) {
    return Heis3Z{std::llround(u.x * rt), std::llround(u.y * rt),
                  std::llround(u.s * static_cast<double>(N))};
  };

  // Directed distance from the window to the embedded lattice; the
  // lattice is inside the continuous group, so the other direction
  // contributes zero for the group-set comparison.
  const int nx = static_cast<int>(std::lround(1.0 / grid_step));
  double d_group = 0.0;
  for (int ix = 0; ix <= nx; ++ix) {
    for (int iy = 0; iy <= nx; ++iy) {
      for (int is = 0; is < nx; ++is) {
        Heis3R u{ix * grid_step, iy * grid_step, is * grid_step};
        d_group = std::max(d_group, heis_dist(u, embed(N, nearest(u))));
      }
    }
  }
  rep.d_group = d_group;

  // Multiplication graphs: for continuous pairs, take the witness pair
  // of nearest lattice points; the embedding is a homomorphism, so the
  // discrete graph sits inside the continuous one and the reverse
  // direction again contributes zero.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uu(0.0, 1.0);
  double d_graph = 0.0;
  const int pairs = 20000;
  for (int i = 0; i < pairs; ++i) {
    Heis3R u{uu(rng), uu(rng), uu(rng)};
    Heis3R v{uu(rng), uu(rng), uu(rng)};
    Heis3Z ud = nearest(u), vd = nearest(v);
    double d = std::max({heis_dist(u, embed(N, ud)), heis_dist(v, embed(N, vd)),
                         heis_dist(hmul(u, v), embed(N, hmul(ud, vd)))});
    d_graph = std::max(d_graph, d);
  }
  rep.d_graph = d_graph;

  rep.within = rep.d_group <= rep.bound_group && rep.d_graph <= rep.bound_graph;
  return rep;
}

Report torus_model_checks(int N, unsigned seed, int samples) {
  Report rep;
  rep.case_name = "torus-discrete-model";
  rep.N = N;
  ModelParams p = ModelParams::torus(N, 1.0, std::exp(1.0 / N));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ur(-1.0, 1.0);
  std::uniform_real_distribution<double> uarg(0.0, kTwoPi);
  std::uniform_int_distribution<int> uw(0, 3);

  auto close = [](Complex a, Complex b) {
    return std::abs(a - b) <= 1e-10 * (1.0 + std::max(std::abs(a), std::abs(b)));
  };

  auto phi = [&p](TorusPoint t) { return phi_torus(t, p); };
  auto phi_inv = [&p](TorusPoint t) { return phi_torus_inv(t, p); };
  auto gam = [&p](TorusPoint t) { return gamma_torus(t, p); };
  auto gam_inv = [&p](TorusPoint t) { return gamma_torus_inv(t, p); };
  auto comm = [&](TorusPoint t) { return phi(gam(phi_inv(gam_inv(t)))); };

  Tally t_comm{"commutator-is-eps-inverse"};
  Tally t_inv{"inverse-maps"};
  Tally t_word{"x-function-along-words"};
  Tally t_cover{"covering-equations"};

  const Complex eps = p.eps();
  for (int i = 0; i < samples; ++i) {
    TorusPoint t{std::polar(std::exp(ur(rng)), uarg(rng))};
    std::string w = "t=" + cdesc(t.t);

    t_comm.note(close(comm(t).t, t.t / eps), w);
    t_inv.note(close(phi_inv(phi(t)).t, t.t) && close(gam_inv(gam(t)).t, t.t),
               w);

    Complex tN = project_torus(t, p);
    int s0 = sgn_index(tN, N);
    int k = uw(rng), l = uw(rng), m = uw(rng);

    // phi^k gamma^l c^m, with c the commutator map (times eps^{-1}).
    TorusPoint cur = t;
    for (int j = 0; j < m; ++j) cur = comm(cur);
    for (int j = 0; j < l; ++j) cur = gam(cur);
    for (int j = 0; j < k; ++j) cur = phi(cur);

    Complex expect = t.t;
    for (int j = 0; j < k; ++j) expect *= p.alpha();
    for (int j = 0; j < l; ++j) expect *= p.beta();
    expect *= std::polar(1.0, kTwoPi * static_cast<double>(l * s0 - m) / N);
    t_word.note(close(cur.t, expect), w);

    Complex base = project_torus(cur, p);
    Complex cover = tN;
    for (int j = 0; j < k; ++j) cover *= p.a_value();
    for (int j = 0; j < l; ++j) cover *= p.b_value();
    t_cover.note(close(base, cover), w);
    t_cover.note(close(project_torus(phi(t), p), p.a_value() * tN) &&
                     close(project_torus(gam(t), p), p.b_value() * tN),
                 w);
  }

  rep.checks = {t_comm.done(), t_inv.done(), t_word.done(), t_cover.done()};
  return rep;
}

}  // namespace nczar
