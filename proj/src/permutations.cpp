#include "ekr/permutations.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ekr {

namespace {

void hash_combine(std::size_t &seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace

Cycle Cycle::canonicalize(std::span<const Element> raw) {
  if (raw.empty())
    throw std::invalid_argument("cycle must be nonempty");
  std::vector<Element> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle has repeated elements");

  std::vector<Element> elements(raw.begin(), raw.end());
  auto lowest = std::min_element(elements.begin(), elements.end());
  std::rotate(elements.begin(), lowest, elements.end());
  return Cycle(std::move(elements));
}

std::vector<Element> Cycle::support() const {
  std::vector<Element> s = elements_;
  std::sort(s.begin(), s.end());
  return s;
}

std::string Cycle::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(elements_[i]);
  }
  out += ')';
  return out;
}

std::size_t CycleHash::operator()(const Cycle &c) const noexcept {
  std::size_t seed = c.length();
  for (Element e : c.elements())
    hash_combine(seed, e);
  return seed;
}

CyclePermutation CyclePermutation::from_cycles(std::vector<Cycle> cycles) {
  CyclePermutation p;
  for (const Cycle &c : cycles)
    for (Element e : c.elements())
      p.ground_.push_back(e);
  std::sort(p.ground_.begin(), p.ground_.end());
  if (std::adjacent_find(p.ground_.begin(), p.ground_.end()) !=
      p.ground_.end())
    throw std::invalid_argument("cycles are not disjoint");
  std::sort(cycles.begin(), cycles.end());
  p.cycles_ = std::move(cycles);
  return p;
}

CyclePermutation
CyclePermutation::from_one_line(std::span<const Element> image) {
  const std::size_t n = image.size();
  std::vector<bool> hit(n + 1, false);
  for (Element v : image) {
    if (v < 1 || v > n || hit[v])
      throw std::invalid_argument("one-line image is not a bijection on [n]");
    hit[v] = true;
  }

  std::vector<Cycle> cycles;
  std::vector<bool> seen(n + 1, false);
  std::vector<Element> orbit;
  for (Element start = 1; start <= n; ++start) {
    if (seen[start])
      continue;
    orbit.clear();
    for (Element e = start; !seen[e]; e = image[e - 1]) {
      seen[e] = true;
      orbit.push_back(e);
    }
    cycles.push_back(Cycle::canonicalize(orbit));
  }
  return from_cycles(std::move(cycles));
}

CyclePermutation CyclePermutation::parse(std::string_view text) {
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " +
                                  std::string(text));
    ++pos;
    std::vector<Element> raw;
    for (;;) {
      skip_space();
      if (pos >= text.size())
        throw std::invalid_argument("unterminated cycle: " + std::string(text));
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      Element value = 0;
      auto [end, ec] =
          std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc() || value == 0)
        throw std::invalid_argument("bad element in cycle notation: " +
                                    std::string(text));
      pos = static_cast<std::size_t>(end - text.data());
      raw.push_back(value);
    }
    cycles.push_back(Cycle::canonicalize(raw));
    skip_space();
  }
  return from_cycles(std::move(cycles));
}

bool CyclePermutation::contains(const Cycle &c) const {
  return std::binary_search(cycles_.begin(), cycles_.end(), c);
}

std::vector<Element> CyclePermutation::to_one_line() const {
  const std::size_t n = ground_.size();
  if (n && ground_.back() != n)
    throw std::logic_error("one-line notation needs ground set [n]");
  std::vector<Element> image(n);
  for (const Cycle &c : cycles_) {
    auto e = c.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
      image[e[i] - 1] = e[(i + 1) % e.size()];
  }
  return image;
}

std::string CyclePermutation::to_string() const {
  std::string out;
  for (const Cycle &c : cycles_)
    out += c.to_string();
  return out;
}

std::size_t PermutationHash::operator()(const CyclePermutation &p) const
    noexcept {
  std::size_t seed = p.cycle_count();
  CycleHash h;
  for (const Cycle &c : p.cycles())
    hash_combine(seed, h(c));
  return seed;
}

std::vector<Element> iota_ground(std::size_t n) {
  std::vector<Element> g(n);
  std::iota(g.begin(), g.end(), Element{1});
  return g;
}

namespace {

// Depth-first construction over ground positions. succ[i] is the position
// following position i in its cycle.
class SnkBuilder {
public:
  SnkBuilder(std::span<const Element> ground, std::size_t k,
             const std::function<void(const CyclePermutation &)> &visit)
      : ground_(ground), k_(k), visit_(visit), succ_(ground.size()) {}

  void run() { place(0, 0); }

private:
  void place(std::size_t pos, std::size_t cycles) {
    const std::size_t remaining = ground_.size() - pos;
    if (cycles > k_ || cycles + remaining < k_)
      return;
    if (pos == ground_.size()) {
      emit();
      return;
    }
    // new 1-cycle: [n-1, k-1] branch
    succ_[pos] = pos;
    place(pos + 1, cycles + 1);
    // insert after an earlier element: (n-1)[n-1, k] branch
    for (std::size_t prev = 0; prev < pos; ++prev) {
      succ_[pos] = succ_[prev];
      succ_[prev] = pos;
      place(pos + 1, cycles);
      succ_[prev] = succ_[pos];
    }
  }

  void emit() {
    std::vector<bool> seen(ground_.size(), false);
    std::vector<Cycle> cycles;
    cycles.reserve(k_);
    std::vector<Element> orbit;
    for (std::size_t start = 0; start < ground_.size(); ++start) {
      if (seen[start])
        continue;
      orbit.clear();
      for (std::size_t i = start; !seen[i]; i = succ_[i]) {
        seen[i] = true;
        orbit.push_back(ground_[i]);
      }
      cycles.push_back(Cycle::canonicalize(orbit));
    }
    visit_(CyclePermutation::from_cycles(std::move(cycles)));
  }

  std::span<const Element> ground_;
  std::size_t k_;
  const std::function<void(const CyclePermutation &)> &visit_;
  std::vector<std::size_t> succ_;
};

} // namespace

void for_each_snk(std::span<const Element> ground, std::size_t k,
                  const std::function<void(const CyclePermutation &)> &visit) {
  if (k > ground.size())
    throw std::invalid_argument("k exceeds the ground set size");
  if (k == 0 && !ground.empty())
    throw std::invalid_argument("k must be positive for a nonempty ground set");
  std::vector<Element> sorted(ground.begin(), ground.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("ground set has repeated elements");
  SnkBuilder(sorted, k, visit).run();
}

std::vector<CyclePermutation> enumerate_snk(std::span<const Element> ground,
                                            std::size_t k) {
  std::vector<CyclePermutation> out;
  for_each_snk(ground, k,
               [&](const CyclePermutation &p) { out.push_back(p); });
  return out;
}

std::vector<CyclePermutation> enumerate_snk(std::size_t n, std::size_t k) {
  return enumerate_snk(iota_ground(n), k);
}

CyclePermutation remove_cycles(const CyclePermutation &pi,
                               std::span<const Cycle> removed) {
  for (const Cycle &c : removed)
    if (!pi.contains(c))
      throw std::invalid_argument("cycle " + c.to_string() +
                                  " is not a cycle of " + pi.to_string());
  std::vector<Cycle> kept;
  for (const Cycle &c : pi.cycles())
    if (std::find(removed.begin(), removed.end(), c) == removed.end())
      kept.push_back(c);
  return CyclePermutation::from_cycles(std::move(kept));
}

} // namespace ekr
