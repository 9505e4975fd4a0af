#include "derange/type_bd.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace derange {

namespace {

int sign(int x) { return x > 0 ? 1 : -1; }

// 1-based scratch window.
class Window {
 public:
  explicit Window(int n) : w_(static_cast<std::size_t>(n), 0) {}
  int& operator[](int k) { return w_.at(static_cast<std::size_t>(k - 1)); }
  std::optional<SignedPermutation> finish() && { return SignedPermutation::from_window(std::move(w_)); }
  SignedPermutation build() && {
    auto p = SignedPermutation::from_window(std::move(w_));
    if (!p) throw std::logic_error("sub-map produced an invalid window");
    return *std::move(p);
  }

 private:
  std::vector<int> w_;
};

// Copies the first `m` entries of p into a window of degree `degree`.
Window prefix(const SignedPermutation& p, int m, int degree) {
  Window w(degree);
  for (int k = 1; k <= m; ++k) w[k] = p(k);
  return w;
}

void require_pair(const SignedPermutation& pi, const SignedPermutation& sigma) {
  if (pi.degree() != sigma.degree()) throw std::invalid_argument("components differ in degree");
  if (pi.degree() <= 2) throw std::invalid_argument("the type B injection needs degree > 2");
  if (!is_derangement_b(pi) || !is_derangement_b(sigma))
    throw std::invalid_argument("input is not a pair of signed derangements");
}

void require_class(const SignedPermutation& pi, const SignedPermutation& sigma, TypeBClass expected,
                   const char* name) {
  if (classify_b(pi, sigma) != expected) throw std::invalid_argument(std::string(name) + ": pair outside its class");
}

// Derangements with pi(n) = +-n, pi(n) = sign * index shares: sigma' of the
// B22 maps with P1 and P2.
SignedPermutation lifted_sigma(const SignedPermutation& sigma, int s) {
  const int n = sigma.degree();
  Window w = prefix(sigma, n - 1, n + 1);
  w[n] = s * (n + 1);
  w[n + 1] = s * sigma(n);
  return std::move(w).build();
}

// Shared by the B22/P2 map and the i = t branch of the B22/P3 map.
SignedPermutation neighbour_swap(const SignedPermutation& pi, int i) {
  const int n = pi.degree();
  const int next = cyclic_add(i, 1, n - 1);
  Window w = prefix(pi, n - 1, n - 1);
  w[i] = -pi(next);
  w[next] = -sign(pi(i)) * pi(n);
  return std::move(w).build();
}

// Image of w_0 in the sigma(n) != -n branch of the B1/P3' map, marking i.
SignedPermutation marker_for(int n, int i) {
  const int m = n - 1;
  Window w(m);
  if (m == 2) {
    // i -+ 1 coincide modulo 2; use the signed transposition that keeps
    // n - 2 negative entries and sends i to the negative side.
    const int j = 3 - i;
    w[i] = -j;
    w[j] = i;
    return std::move(w).build();
  }
  const int before = cyclic_add(i, -1, m);
  const int after = cyclic_add(i, 1, m);
  for (int k = 1; k <= m; ++k) w[k] = -k;
  w[before] = after;
  w[after] = -before;
  return std::move(w).build();
}

SignedPermutation star_first(int n) {
  Window w(n - 1);
  for (int k = 1; k <= n - 1; ++k) w[k] = -k;
  w[1] = -(n - 1);
  w[n - 1] = 1;
  return std::move(w).build();
}

SignedPermutation constant_sigma_12(int n) {
  Window w(n + 1);
  for (int k = 1; k <= n - 3; ++k) w[k] = -k;
  w[n - 2] = -(n - 1);
  w[n - 1] = n - 2;
  w[n] = n + 1;
  w[n + 1] = n;
  return std::move(w).build();
}

SignedPermutation flip_at(const SignedPermutation& p, int k, int degree) {
  Window w = prefix(p, degree, degree);
  w[k] = -w[k];
  return std::move(w).build();
}

}  // namespace

std::string to_string(TypeBClass c) {
  std::string first;
  switch (c.first) {
    case FirstTag::B1: first = "B1"; break;
    case FirstTag::B21: first = "B21"; break;
    case FirstTag::B22: first = "B22"; break;
  }
  std::string pair;
  switch (c.pair) {
    case PairTag::P1: pair = "P1"; break;
    case PairTag::P2: pair = "P2"; break;
    case PairTag::P3: pair = "P3"; break;
    case PairTag::P1p: pair = "P1'"; break;
    case PairTag::P2p: pair = "P2'"; break;
    case PairTag::P3p: pair = "P3'"; break;
    case PairTag::P4p: pair = "P4'"; break;
    case PairTag::Any: pair = "ANY"; break;
  }
  return first + "/" + pair;
}

TypeBClass classify_b(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_pair(pi, sigma);
  const int n = pi.degree();
  if (pi(n) == -n) {
    const bool tp = tau(pi) != 0;
    const bool ts = tau(sigma) != 0;
    if (tp && ts) return {FirstTag::B1, PairTag::P1p};
    if (tp) return {FirstTag::B1, PairTag::P2p};
    if (ts) return {FirstTag::B1, PairTag::P3p};
    return {FirstTag::B1, PairTag::P4p};
  }
  const int k = kappa(pi);
  if (sign(pi(k)) * pi(n) != k) return {FirstTag::B21, PairTag::Any};
  if (sigma(n) == -n) return {FirstTag::B22, PairTag::P3};
  if (std::abs(sigma(n)) == k) return {FirstTag::B22, PairTag::P2};
  return {FirstTag::B22, PairTag::P1};
}

SignedPair phi_a(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_class(pi, sigma, {FirstTag::B22, PairTag::P1}, "phi_a");
  const int n = pi.degree();
  const int i = kappa(pi);
  const int u = std::abs(sigma(n));
  const int s = sign(pi(i));
  Window w = prefix(pi, n - 1, n - 1);
  w[i] = pi(u);
  w[u] = s * pi(n);
  return {std::move(w).build(), lifted_sigma(sigma, s)};
}

SignedPair phi_b(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_class(pi, sigma, {FirstTag::B22, PairTag::P2}, "phi_b");
  const int i = kappa(pi);
  return {neighbour_swap(pi, i), lifted_sigma(sigma, sign(pi(i)))};
}

SignedPair phi_c(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_class(pi, sigma, {FirstTag::B22, PairTag::P3}, "phi_c");
  const int n = pi.degree();
  const int i = kappa(pi);
  const int t = std::max(tau(sigma), 1);
  const int s = sign(pi(i));

  Window lifted = prefix(sigma, n - 1, n + 1);
  lifted[n] = s * (n + 1);
  lifted[n + 1] = -s * n;

  if (i == t) return {neighbour_swap(pi, i), std::move(lifted).build()};
  Window w = prefix(pi, n - 1, n - 1);
  w[i] = pi(t);
  w[t] = s * pi(n);
  return {std::move(w).build(), std::move(lifted).build()};
}

SignedPair phi_21(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_class(pi, sigma, {FirstTag::B21, PairTag::Any}, "phi_21");
  const int n = pi.degree();
  const int i = kappa(pi);
  const int s = sign(pi(i));
  Window first = prefix(pi, n - 1, n - 1);
  first[i] = s * pi(n);
  Window second = prefix(sigma, n, n + 1);
  second[i] = s * (n + 1);
  second[n + 1] = s * sigma(i);
  return {std::move(first).build(), std::move(second).build()};
}

SignedPair phi_11(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_class(pi, sigma, {FirstTag::B1, PairTag::P1p}, "phi_11");
  const int n = pi.degree();
  Window second = prefix(flip_at(sigma, tau(sigma), n), n, n + 1);
  second[n + 1] = -(n + 1);
  return {flip_at(pi, tau(pi), n - 1), std::move(second).build()};
}

SignedPair phi_12(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_class(pi, sigma, {FirstTag::B1, PairTag::P2p}, "phi_12");
  const int n = pi.degree();
  return {flip_at(pi, tau(pi), n - 1), constant_sigma_12(n)};
}

SignedPair phi_13(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_class(pi, sigma, {FirstTag::B1, PairTag::P3p}, "phi_13");
  const int n = pi.degree();
  const int i = std::abs(sigma(n));
  Window second = prefix(sigma, n - 1, n + 1);
  second[n] = -(n + 1);
  if (i != n) {
    second[n + 1] = -sigma(n);
    return {marker_for(n, i), std::move(second).build()};
  }
  const int t = tau(sigma);
  second[t] = -sigma(t);
  second[n + 1] = -n;
  return {star_first(n), std::move(second).build()};
}

SignedPair phi_star(int n) {
  if (n <= 2) throw std::invalid_argument("phi_star needs degree > 2");
  Window second(n + 1);
  for (int k = 1; k <= n - 1; ++k) second[k] = -k;
  second[n] = -(n + 1);
  second[n + 1] = n;
  return {star_first(n), std::move(second).build()};
}

SignedPair phi(const SignedPermutation& pi, const SignedPermutation& sigma) {
  const auto c = classify_b(pi, sigma);
  switch (c.pair) {
    case PairTag::P1: return phi_a(pi, sigma);
    case PairTag::P2: return phi_b(pi, sigma);
    case PairTag::P3: return phi_c(pi, sigma);
    case PairTag::Any: return phi_21(pi, sigma);
    case PairTag::P1p: return phi_11(pi, sigma);
    case PairTag::P2p: return phi_12(pi, sigma);
    case PairTag::P3p: return phi_13(pi, sigma);
    case PairTag::P4p: return phi_star(pi.degree());
  }
  throw std::logic_error("phi: unreachable");
}

namespace {

struct Shape {
  int n;
  bool ok;
};

Shape image_shape(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const int n = zeta.degree() + 1;
  return {n, n > 2 && xi.degree() == n + 1};
}

// sigma from sigma' for the P1 and P2 inverses.
std::optional<SignedPermutation> lowered_sigma(const SignedPermutation& xi, int n) {
  Window w = prefix(xi, n - 1, n);
  w[n] = sign(xi(n)) * xi(n + 1);
  return std::move(w).finish();
}

std::optional<SignedPair> combine(std::optional<SignedPermutation> a, std::optional<SignedPermutation> b) {
  if (!a || !b) return std::nullopt;
  return SignedPair{*std::move(a), *std::move(b)};
}

bool in_range(int v, int lo, int hi) { return v >= lo && v <= hi; }

}  // namespace

std::optional<SignedPair> theta_a(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const auto [n, ok] = image_shape(zeta, xi);
  if (!ok) return std::nullopt;
  const int s = sign(xi(n));
  const int u0 = std::abs(xi(n + 1));
  if (!in_range(u0, 1, n - 1)) return std::nullopt;
  const int i0 = zeta(u0);
  if (!in_range(i0, 1, n - 1) || i0 == u0) return std::nullopt;
  Window w = prefix(zeta, n - 1, n);
  w[u0] = zeta(i0);
  w[i0] = s * n;
  w[n] = s * i0;
  return combine(std::move(w).finish(), lowered_sigma(xi, n));
}

std::optional<SignedPair> theta_b(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const auto [n, ok] = image_shape(zeta, xi);
  if (!ok) return std::nullopt;
  const int s = sign(xi(n));
  const int i0 = std::abs(xi(n + 1));
  if (!in_range(i0, 1, n - 1)) return std::nullopt;
  const int next = cyclic_add(i0, 1, n - 1);
  Window w = prefix(zeta, n - 1, n);
  w[i0] = s * n;
  w[next] = -zeta(i0);
  w[n] = -s * zeta(next);
  return combine(std::move(w).finish(), lowered_sigma(xi, n));
}

std::optional<SignedPair> theta_c(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const auto [n, ok] = image_shape(zeta, xi);
  if (!ok) return std::nullopt;
  Window low = prefix(xi, n - 1, n);
  low[n] = -n;
  auto sigma = std::move(low).finish();
  if (!sigma) return std::nullopt;

  const int s = sign(xi(n));
  const int t = std::max(tau(*sigma), 1);
  const int next = cyclic_add(t, 1, n - 1);
  Window w = prefix(zeta, n - 1, n);
  if (t + zeta(next) == 0) {
    w[t] = s * n;
    w[next] = -zeta(t);
    w[n] = -s * zeta(next);
  } else {
    const int i0 = zeta(t);
    if (!in_range(i0, 1, n - 1) || i0 == t) return std::nullopt;
    w[i0] = s * n;
    w[t] = zeta(i0);
    w[n] = s * zeta(t);
  }
  return combine(std::move(w).finish(), std::move(sigma));
}

std::optional<SignedPair> theta_21(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const auto [n, ok] = image_shape(zeta, xi);
  if (!ok) return std::nullopt;
  const int i0 = kappa(xi);
  if (!in_range(i0, 1, n - 1)) return std::nullopt;
  const int s = sign(xi(i0));
  Window first = prefix(zeta, n - 1, n);
  first[i0] = s * n;
  first[n] = s * zeta(i0);
  Window second = prefix(xi, n, n);
  second[i0] = s * xi(n + 1);
  return combine(std::move(first).finish(), std::move(second).finish());
}

std::optional<SignedPair> theta_11(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const auto [n, ok] = image_shape(zeta, xi);
  if (!ok) return std::nullopt;
  const int t1 = tau(zeta);
  const int t2 = tau(xi);
  if (t1 == 0 || t2 == 0 || t2 > n) return std::nullopt;
  Window first = prefix(zeta, n - 1, n);
  first[t1] = -zeta(t1);
  first[n] = -n;
  Window second = prefix(xi, n, n);
  second[t2] = -xi(t2);
  return combine(std::move(first).finish(), std::move(second).finish());
}

std::optional<SignedPair> theta_12(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const auto [n, ok] = image_shape(zeta, xi);
  if (!ok || xi != constant_sigma_12(n)) return std::nullopt;
  const int t1 = tau(zeta);
  if (t1 == 0) return std::nullopt;
  Window first = prefix(zeta, n - 1, n);
  first[t1] = -zeta(t1);
  first[n] = -n;
  return combine(std::move(first).finish(), SignedPermutation::longest(n));
}

std::optional<SignedPair> theta_13(const SignedPermutation& zeta, const SignedPermutation& xi) {
  const auto [n, ok] = image_shape(zeta, xi);
  if (!ok || xi(n) != -(n + 1)) return std::nullopt;
  Window second = prefix(xi, n - 1, n);
  if (xi(n + 1) == -n) {
    second[n] = -n;
    auto sigma = std::move(second).finish();
    if (!sigma) return std::nullopt;
    const int t = tau(*sigma);
    if (t == 0) return std::nullopt;
    return SignedPair{SignedPermutation::longest(n), flip_at(*sigma, t, n)};
  }
  second[n] = -xi(n + 1);
  return combine(SignedPermutation::longest(n), std::move(second).finish());
}

std::optional<SignedPair> try_theta(int n, const SignedPermutation& zeta, const SignedPermutation& xi) {
  if (n <= 2) throw std::invalid_argument("theta: degree must exceed 2");
  if (zeta.degree() != n - 1 || xi.degree() != n + 1)
    throw std::invalid_argument("theta: expected degrees " + std::to_string(n - 1) + " and " + std::to_string(n + 1));
  if (!is_derangement_b(zeta) || !is_derangement_b(xi))
    throw std::invalid_argument("theta: input is not a pair of signed derangements");

  using Inverse = std::optional<SignedPair> (*)(const SignedPermutation&, const SignedPermutation&);
  std::vector<Inverse> candidates;
  const int m = kappa(xi);
  if (m == n + 1) {
    candidates = {theta_11};
  } else if (m < n) {
    candidates = {theta_21};
  } else if (std::abs(xi(n + 1)) == n) {
    candidates = {theta_c, theta_12, theta_13};
  } else {
    candidates = {theta_a, theta_b, theta_13};
  }

  for (auto inverse : candidates) {
    auto pre = inverse(zeta, xi);
    if (!pre || !is_derangement_b(pre->first) || !is_derangement_b(pre->second)) continue;
    if (phi(pre->first, pre->second) == SignedPair{zeta, xi}) return pre;
  }
  if (m == n && zeta == star_first(n) && xi == phi_star(n).second)
    return SignedPair{SignedPermutation::longest(n), SignedPermutation::longest(n)};
  return std::nullopt;
}

SignedPair theta(int n, const SignedPermutation& zeta, const SignedPermutation& xi) {
  auto pre = try_theta(n, zeta, xi);
  if (!pre)
    throw NotInImage("(" + to_string(zeta) + ";" + to_string(xi) + ") is not in the image of the degree-" +
                     std::to_string(n) + " injection");
  return *std::move(pre);
}

SignedPair naive_b1_map(const SignedPermutation& pi, const SignedPermutation& sigma) {
  require_pair(pi, sigma);
  const int n = pi.degree();
  if (pi(n) != -n) throw std::invalid_argument("naive_b1_map: pi(n) must be -n");
  Window second = prefix(sigma, n, n + 1);
  second[n + 1] = -(n + 1);
  return {prefix(pi, n - 1, n - 1).build(), std::move(second).build()};
}

}  // namespace derange
