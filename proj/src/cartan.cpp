#include "krc/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "krc/errors.hpp"

namespace krc {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix finite_cartan(Family family, int n) {
  Matrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  const int chain_end = family == Family::D ? n - 1 : n;
  for (int i = 0; i + 1 < chain_end; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  switch (family) {
    case Family::A:
      break;
    case Family::B:
      a[n - 1][n - 2] = -2;
      break;
    case Family::C:
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
  }
  return a;
}

std::vector<int> half_norms(Family family, int n) {
  std::vector<int> h(n, 1);
  if (family == Family::B)
    for (int i = 0; i + 1 < n; ++i) h[i] = 2;
  if (family == Family::C) h[n - 1] = 2;
  return h;
}

// Bareiss fraction-free determinant.
long long determinant(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A:
      return 'A';
    case Family::B:
      return 'B';
    case Family::C:
      return 'C';
    case Family::D:
      return 'D';
  }
  return '?';
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? "," : "") << coords_[k];
  os << ')';
  return os.str();
}

bool Root::positive() const {
  bool nonzero = false;
  for (int c : coords) {
    if (c < 0) return false;
    nonzero |= c != 0;
  }
  return nonzero;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

std::string Root::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords.size(); ++k) os << (k ? "," : "") << coords[k];
  os << ')';
  return os.str();
}

std::shared_ptr<const CartanData> CartanData::build(Family family, int rank) {
  const int min_rank = family == Family::A ? 1 : family == Family::D ? 4 : 2;
  if (rank < min_rank || rank > 16) {
    std::ostringstream os;
    os << "rank " << rank << " out of range for type " << family_letter(family) << " (minimum "
       << min_rank << ")";
    throw InvalidArgument(os.str());
  }

  std::shared_ptr<CartanData> cd(new CartanData());
  cd->family_ = family;
  cd->rank_ = rank;
  const int n = rank;
  const Matrix a = finite_cartan(family, n);
  cd->half_norm_ = half_norms(family, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cd->half_norm_[i] * a[i][j] != cd->half_norm_[j] * a[j][i])
        throw Error("internal: Cartan matrix not symmetrised by root lengths");

  // Positive roots: orbit closure of the simple roots under simple reflections.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += a[i][j] * beta.coords[j];
      Root image = beta;
      image.coords[i] -= p;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  for (const auto& r : seen)
    if (r.positive()) cd->positive_.push_back(r);
  std::sort(cd->positive_.begin(), cd->positive_.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords < y.coords;
  });
  cd->highest_ = cd->positive_.size() - 1;

  for (const auto& beta : cd->positive_) {
    int norm2 = 0;  // 2 * (beta, beta) / 2
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm2 += beta.coords[i] * beta.coords[j] * cd->half_norm_[i] * a[i][j];
    const int half = norm2 / 2;
    std::vector<int> co(n);
    for (int i = 0; i < n; ++i) {
      const int num = beta.coords[i] * cd->half_norm_[i];
      if (num % half != 0) throw Error("internal: non-integral coroot");
      co[i] = num / half;
    }
    cd->coroots_.push_back(std::move(co));
  }

  // Affine extension: alpha_0 = delta - theta, K = alpha_0^vee + theta^vee.
  const Root& theta = cd->positive_[cd->highest_];
  const std::vector<int>& theta_co = cd->coroots_[cd->highest_];
  cd->affine_.assign(n + 1, std::vector<int>(n + 1, 0));
  cd->affine_[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cd->affine_[i + 1][j + 1] = a[i][j];
  for (int j = 0; j < n; ++j) {
    int p = 0;
    for (int i = 0; i < n; ++i) p += theta_co[i] * a[i][j];
    cd->affine_[0][j + 1] = -p;
  }
  for (int i = 0; i < n; ++i) {
    int p = 0;
    for (int j = 0; j < n; ++j) p += a[i][j] * theta.coords[j];
    cd->affine_[i + 1][0] = -p;
  }
  cd->kac_.assign(n + 1, 1);
  cd->dual_kac_.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) {
    cd->kac_[i + 1] = theta.coords[i];
    cd->dual_kac_[i + 1] = theta_co[i];
  }

  std::vector<std::vector<long long>> fin(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fin[i][j] = a[i][j];
  cd->det_ = determinant(fin);
  cd->adjugate_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<long long>> minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<long long> row;
        for (int c = 0; c < n; ++c)
          if (c != i) row.push_back(fin[r][c]);
        minor.push_back(std::move(row));
      }
      cd->adjugate_[i][j] = ((i + j) % 2 ? -1 : 1) * determinant(std::move(minor));
    }
  return cd;
}

std::shared_ptr<const CartanData> CartanData::parse(std::string_view name) {
  std::string s(name);
  if (!s.empty() && s.back() == '~') s.pop_back();
  if (s.size() < 2) throw InvalidArgument("bad Cartan type '" + std::string(name) + "'");
  Family family;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A':
      family = Family::A;
      break;
    case 'B':
      family = Family::B;
      break;
    case 'C':
      family = Family::C;
      break;
    case 'D':
      family = Family::D;
      break;
    default:
      throw InvalidArgument("unsupported Cartan family in '" + std::string(name) + "'");
  }
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw InvalidArgument("bad Cartan type '" + std::string(name) + "'");
    rank = rank * 10 + (s[k] - '0');
    if (rank > 1000) throw InvalidArgument("bad Cartan type '" + std::string(name) + "'");
  }
  return build(family, rank);
}

std::string CartanData::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

int CartanData::c_value(int r) const {
  if (r < 1 || r > rank_) throw InvalidArgument("c_value: node outside I0");
  return std::max(kac_[r] / dual_kac_[r], 1);
}

std::vector<int> CartanData::neighbours(int a) const {
  std::vector<int> out;
  for (int b = 1; b <= rank_; ++b)
    if (b != a && affine_[a][b] != 0) out.push_back(b);
  return out;
}

int CartanData::positive_index(const Root& beta) const {
  auto it = std::lower_bound(positive_.begin(), positive_.end(), beta, [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords < y.coords;
  });
  if (it != positive_.end() && *it == beta) return static_cast<int>(it - positive_.begin());
  return -1;
}

bool CartanData::is_root(const Root& beta) const {
  return positive_index(beta) >= 0 || positive_index(-beta) >= 0;
}

Root CartanData::simple_root(int i) const {
  if (i == 0) return -highest_root();
  Root r{std::vector<int>(rank_, 0)};
  r.coords[i - 1] = 1;
  return r;
}

std::vector<int> CartanData::coroot(const Root& beta) const {
  if (int k = positive_index(beta); k >= 0) return coroots_[k];
  if (int k = positive_index(-beta); k >= 0) {
    auto c = coroots_[k];
    for (auto& x : c) x = -x;
    return c;
  }
  throw InvalidArgument("coroot: " + beta.str() + " is not a root");
}

int CartanData::pairing(const Root& beta, const Weight& mu) const {
  const auto co = coroot(beta);
  int p = 0;
  for (int i = 0; i < rank_; ++i) p += co[i] * mu[i];
  return p;
}

int CartanData::simple_pairing(int i, const Weight& mu) const {
  if (i == 0) {
    const auto& co = coroots_[highest_];
    int p = 0;
    for (int k = 0; k < rank_; ++k) p += co[k] * mu[k];
    return -p;
  }
  return mu[i - 1];
}

Weight CartanData::root_weight(const Root& beta) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += affine_[i + 1][j + 1] * beta.coords[j];
  return w;
}

Weight CartanData::simple_root_weight(int i) const { return root_weight(simple_root(i)); }

Weight CartanData::fundamental(int i) const {
  Weight w = Weight::zero(rank_);
  w[i - 1] = 1;
  return w;
}

Weight CartanData::rho() const { return Weight(std::vector<int>(rank_, 1)); }

std::optional<std::vector<int>> CartanData::root_coords(const Weight& mu) const {
  std::vector<int> out(rank_);
  for (int i = 0; i < rank_; ++i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += adjugate_[i][j] * mu[j];
    if (s % det_ != 0) return std::nullopt;
    out[i] = static_cast<int>(s / det_);
  }
  return out;
}

bool CartanData::dominates(const Weight& a, const Weight& b) const {
  const auto c = root_coords(a - b);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

bool CartanData::is_dominant(const Weight& mu) const {
  return std::all_of(mu.coords().begin(), mu.coords().end(), [](int x) { return x >= 0; });
}

}  // namespace krc
