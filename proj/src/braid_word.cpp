#include "braid/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braid {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) fail("permutation must have positive degree");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1]) fail("permutation images must be a bijection on 1..n");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) fail("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::longest(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = n - i;
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& g) const {
  if (g.size() != size()) fail("composing permutations of different degree");
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[i] = g.images_[images_[i] - 1];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cyc;
    for (int t = s; !seen[t - 1]; t = image(t)) {
      seen[t - 1] = true;
      cyc.push_back(t);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) fail("braid word needs at least one strand");
  for (int k : letters_) {
    if (k == 0) fail("letter 0 is not a generator");
    if (std::abs(k) > strands_ - 1)
      fail("letter " + std::to_string(k) + " out of range for " + std::to_string(strands_) +
           " strands");
  }
}

BraidWord BraidWord::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) fail("braid word must look like \"n: k1 k2 ...\"");
  int n = 0;
  {
    std::size_t b = 0, e = colon;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    auto res = std::from_chars(text.data() + b, text.data() + e, n);
    if (res.ec != std::errc() || res.ptr != text.data() + e || b == e)
      fail("bad strand count in braid word header");
  }
  std::vector<int> letters;
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::string tok;
  while (body >> tok) {
    int k = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), k);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
      fail("bad letter \"" + tok + "\" in braid word");
    letters.push_back(k);
  }
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::str() const {
  std::string out = std::to_string(strands_) + ": ";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) fail("concatenating words on different strand counts");
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

Permutation perm(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  // im is position -> strand while we scan; invert at the end.
  for (int k : w.letters()) {
    const int i = std::abs(k);
    std::swap(im[i - 1], im[i]);
  }
  std::vector<int> images(n);
  for (int pos = 1; pos <= n; ++pos) images[im[pos - 1] - 1] = pos;
  return Permutation(std::move(images));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& k : letters) k = -k;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord rotate180(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& k : letters) k = k > 0 ? n - k : -(n + k);
  return BraidWord(n, std::move(letters));
}

BraidWord delete_strands(const BraidWord& w, const StrandSet& dead) {
  const int n = w.strands();
  if (dead.empty()) fail("delete_strands needs a nonempty strand set");
  if (static_cast<int>(dead.size()) >= n) fail("cannot delete every strand");
  for (int s : dead)
    if (s < 1 || s > n) fail("strand " + std::to_string(s) + " out of range");

  std::vector<int> strand_at(n);  // strand occupying each position, 0-based positions
  std::iota(strand_at.begin(), strand_at.end(), 1);
  const auto alive = [&](int strand) { return !dead.count(strand); };

  std::vector<int> letters;
  for (int k : w.letters()) {
    const int i = std::abs(k);
    const int a = strand_at[i - 1], b = strand_at[i];
    if (alive(a) && alive(b)) {
      int idx = 0;
      for (int p = 0; p < i; ++p) idx += alive(strand_at[p]) ? 1 : 0;
      letters.push_back(k > 0 ? idx : -idx);
    }
    std::swap(strand_at[i - 1], strand_at[i]);
  }
  return free_reduce(BraidWord(n - static_cast<int>(dead.size()), std::move(letters)));
}

BraidWord embed(const BraidWord& w, int total, int offset) {
  if (offset < 1 || offset + w.strands() - 1 > total)
    fail("embedding does not fit in the target strand count");
  std::vector<int> letters = w.letters();
  for (int& k : letters) k = k > 0 ? k + offset - 1 : k - offset + 1;
  return BraidWord(total, std::move(letters));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int k : w.letters()) sum += k > 0 ? 1 : -1;
  return sum;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  for (int k : w.letters()) {
    if (!stack.empty() && stack.back() == -k)
      stack.pop_back();
    else
      stack.push_back(k);
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord power(const BraidWord& w, int k) {
  const BraidWord& base = k >= 0 ? w : inverse(w);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(std::abs(k)) * w.letters().size());
  for (int r = 0; r < std::abs(k); ++r)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace braid
