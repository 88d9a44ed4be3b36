#include "yotl/permwords.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "yotl/util.hpp"

namespace yotl {

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("transposition index out of range");
  Permutation p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
      throw std::invalid_argument("image vector is not a permutation");
    seen[v - 1] = 1;
  }
  Permutation p(static_cast<int>(images.size()));
  p.img_ = std::move(images);
  return p;
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > degree())
    throw std::invalid_argument("permutation argument out of range");
  return img_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("signature mismatch: composing permutations of different degree");
  Permutation r(degree());
  for (int i = 1; i <= degree(); ++i)
    r.img_[i - 1] = img_[static_cast<std::size_t>(rhs.img_[i - 1] - 1)];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (int i = 1; i <= degree(); ++i) r.img_[static_cast<std::size_t>(img_[i - 1] - 1)] = i;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

long Permutation::length() const {
  long inv = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

CanonicalWord::CanonicalWord(std::vector<Run> runs) : runs_(std::move(runs)) {
  int prev_head = 0;
  for (const Run& r : runs_) {
    if (r.foot < 1 || r.foot > r.head)
      throw std::invalid_argument("malformed run in canonical word");
    if (r.head <= prev_head)
      throw std::invalid_argument("canonical word heads must strictly increase");
    prev_head = r.head;
  }
}

std::vector<int> CanonicalWord::letters() const {
  std::vector<int> out;
  for (const Run& r : runs_)
    for (int l = r.head; l >= r.foot; --l) out.push_back(l);
  return out;
}

std::size_t CanonicalWord::letter_count() const {
  std::size_t k = 0;
  for (const Run& r : runs_) k += static_cast<std::size_t>(r.head - r.foot + 1);
  return k;
}

bool CanonicalWord::feet_strictly_increase() const {
  for (std::size_t i = 1; i < runs_.size(); ++i)
    if (runs_[i - 1].foot >= runs_[i].foot) return false;
  return true;
}

std::string CanonicalWord::str() const {
  if (runs_.empty()) return "1";
  std::string out;
  for (const Run& r : runs_) {
    out += "(";
    for (int l = r.head; l >= r.foot; --l) {
      out += "s" + std::to_string(l);
      if (l > r.foot) out += " ";
    }
    out += ")";
  }
  return out;
}

CanonicalWord canonical_word(const Permutation& p) {
  std::vector<int> img = p.images();
  int n = p.degree();
  std::vector<Run> runs;
  for (int top = n; top >= 2; --top) {
    if (img[top - 1] == top) continue;
    // top is the largest moved point; find the position mapping onto it.
    int j = 0;
    for (int x = 1; x <= top; ++x)
      if (img[x - 1] == top) {
        j = x;
        break;
      }
    runs.push_back(Run{top - 1, j});
    // Strip the run: compose with the inverse cycle (j .. top).
    std::vector<int> next(img);
    for (int x = j; x < top; ++x) next[x - 1] = img[x];
    next[top - 1] = top;
    img = std::move(next);
  }
  std::reverse(runs.begin(), runs.end());
  return CanonicalWord(std::move(runs));
}

Permutation permutation_of_letters(int n, const std::vector<int>& letters) {
  Permutation q(n);
  for (int l : letters) q = q.compose(Permutation::transposition(n, l));
  return q;
}

FramingVector act(const Permutation& p, const FramingVector& f) {
  if (static_cast<int>(f.size()) != p.degree())
    throw std::invalid_argument("signature mismatch: framing length vs permutation degree");
  FramingVector r(f.size());
  for (int j = 1; j <= p.degree(); ++j) r[static_cast<std::size_t>(p(j) - 1)] = f[j - 1];
  return r;
}

bool word_order_less(const FramingVector& fa, const Permutation& pa,
                     const FramingVector& fb, const Permutation& pb) {
  if (fa != fb) return fa < fb;
  long la = pa.length(), lb = pb.length();
  if (la != lb) return la < lb;
  return canonical_word(pa).letters() < canonical_word(pb).letters();
}

std::vector<Permutation> permutations_by_word_order(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> all;
  do {
    all.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  std::vector<std::pair<std::pair<long, std::vector<int>>, std::size_t>> keys;
  keys.reserve(all.size());
  for (std::size_t idx = 0; idx < all.size(); ++idx)
    keys.push_back({{all[idx].length(), canonical_word(all[idx]).letters()}, idx});
  std::sort(keys.begin(), keys.end());
  std::vector<Permutation> out;
  out.reserve(all.size());
  for (const auto& [key, idx] : keys) out.push_back(all[idx]);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  if (!f.fits_ulong_p()) throw std::overflow_error("factorial overflows");
  return f.get_ui();
}

std::uint64_t catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of a negative number");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n),
               static_cast<unsigned long>(n));
  mpz_class c = b / (n + 1);
  if (!c.fits_ulong_p()) throw std::overflow_error("catalan number overflows");
  return c.get_ui();
}

namespace {
std::uint64_t power_times(std::uint64_t base, int e, std::uint64_t tail) {
  mpz_class v(static_cast<unsigned long>(tail));
  for (int k = 0; k < e; ++k) v *= static_cast<unsigned long>(base);
  if (!v.fits_ulong_p()) throw std::overflow_error("dimension overflows");
  return v.get_ui();
}
}  // namespace

std::uint64_t dimension_formula(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("dimension_formula needs d >= 1, n >= 0");
  return power_times(static_cast<std::uint64_t>(d), n, catalan(n));
}

std::uint64_t full_dimension(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("full_dimension needs d >= 1, n >= 0");
  return power_times(static_cast<std::uint64_t>(d), n, factorial(n));
}

std::vector<std::pair<FramingVector, Permutation>> enumerate_S(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("enumerate_S needs d >= 1, n >= 1");
  std::uint64_t total = full_dimension(d, n);
  if (total > limits().max_dim)
    throw CapExceeded("enumeration of " + std::to_string(total) +
                      " basis words exceeds the configured cap of " +
                      std::to_string(limits().max_dim));
  std::vector<Permutation> perms = permutations_by_word_order(n);
  std::vector<std::pair<FramingVector, Permutation>> out;
  out.reserve(static_cast<std::size_t>(total));
  FramingVector f(static_cast<std::size_t>(n), 0);
  while (true) {
    for (const Permutation& p : perms) out.emplace_back(f, p);
    // Odometer, rightmost digit fastest: framing lexicographic order.
    int pos = n - 1;
    while (pos >= 0 && f[static_cast<std::size_t>(pos)] == d - 1) {
      f[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++f[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::vector<std::pair<FramingVector, Permutation>> enumerate_Sigma(int d, int n) {
  std::vector<std::pair<FramingVector, Permutation>> all = enumerate_S(d, n);
  std::vector<std::pair<FramingVector, Permutation>> out;
  for (auto& fp : all)
    if (canonical_word(fp.second).feet_strictly_increase()) out.push_back(std::move(fp));
  return out;
}

}  // namespace yotl
