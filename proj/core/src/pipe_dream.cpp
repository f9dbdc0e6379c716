#include "schubcomb/pipe_dream.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubcomb {

int PipeDream::cell_index(int n, int i, int j) {
  // Row i holds n-i crossable cells; rows stack row-major.
  const int offset = (i - 1) * n - (i - 1) * i / 2;
  return offset + (j - 1);
}

PipeDream::PipeDream(int n, std::uint64_t cross_bits) : n_(n), bits_(cross_bits) {
  if (n_ < 1) throw std::invalid_argument("pipe dream: size must be >= 1");
  if (staircase_cells(n_) > 128)
    throw std::invalid_argument("pipe dream: size too large for the bitset layout");
  if (staircase_cells(n_) < 128 && (bits_ >> staircase_cells(n_)) != 0)
    throw std::invalid_argument("pipe dream: cross bits outside the staircase");
}

std::uint64_t PipeDream::bits() const {
  if (staircase_cells(n_) > 64)
    throw std::logic_error("pipe dream: bitset does not fit in 64 bits");
  return static_cast<std::uint64_t>(bits_);
}

PipeDream::PipeDream(int n, const CellSet& crosses) : n_(n), bits_(0) {
  if (n_ < 1) throw std::invalid_argument("pipe dream: size must be >= 1");
  if (staircase_cells(n_) > 128)
    throw std::invalid_argument("pipe dream: size too large for the bitset layout");
  for (const Cell& c : crosses) {
    if (c.row < 1 || c.col < 1 || c.row + c.col > n_)
      throw std::invalid_argument("pipe dream: cross " + to_string(c) +
                                  " outside the staircase");
    bits_ |= static_cast<unsigned __int128>(1) << cell_index(n_, c.row, c.col);
  }
}

PipeDream PipeDream::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n' || c == '/') {
      lines.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  const int n = static_cast<int>(lines.size());
  if (n < 1) throw std::invalid_argument("pipe dream: empty input");
  CellSet crosses;
  for (int i = 1; i <= n; ++i) {
    const std::string& line = lines[static_cast<std::size_t>(i) - 1];
    if (static_cast<int>(line.size()) != n - i + 1)
      throw std::invalid_argument("pipe dream: row " + std::to_string(i) +
                                  " must have " + std::to_string(n - i + 1) + " characters");
    for (int j = 1; j <= n - i + 1; ++j) {
      const char c = line[static_cast<std::size_t>(j) - 1];
      if (c == '+') {
        if (i + j > n)
          throw std::invalid_argument("pipe dream: cross on the antidiagonal at " +
                                      to_string(Cell{i, j}));
        crosses.insert(Cell{i, j});
      } else if (c != '.') {
        throw std::invalid_argument(std::string("pipe dream: unknown character '") + c + "'");
      }
    }
  }
  return PipeDream(n, crosses);
}

bool PipeDream::has_cross(int i, int j) const {
  if (i < 1 || j < 1 || i + j > n_) return false;
  return (bits_ >> cell_index(n_, i, j)) & 1;
}

CellSet PipeDream::crosses() const {
  CellSet out;
  for (int i = 1; i < n_; ++i)
    for (int j = 1; i + j <= n_; ++j)
      if (has_cross(i, j)) out.insert(Cell{i, j});
  return out;
}

int PipeDream::cross_count() const {
  return __builtin_popcountll(static_cast<std::uint64_t>(bits_)) +
         __builtin_popcountll(static_cast<std::uint64_t>(bits_ >> 64));
}

Monomial PipeDream::cross_weight() const {
  Monomial w;
  for (int i = 1; i < n_; ++i)
    for (int j = 1; i + j <= n_; ++j)
      if (has_cross(i, j)) w *= Monomial::var(i);
  return w;
}

std::string PipeDream::str() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_ - i + 1; ++j) out += has_cross(i, j) ? '+' : '.';
    out += '\n';
  }
  return out;
}

std::string PipeDream::key() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += '/';
    for (int j = 1; j <= n_ - i + 1; ++j) out += has_cross(i, j) ? '+' : '.';
  }
  return out;
}

void validate_sequence(const BoundedCompatibleSequence& seq) {
  if (seq.a.size() != seq.r.size())
    throw std::invalid_argument("sequence: a and r must have the same length");
  const std::size_t len = seq.a.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (seq.a[i] < 1 || seq.r[i] < 1)
      throw std::invalid_argument("sequence: entries must be positive");
    if (seq.a[i] < seq.r[i]) throw std::invalid_argument("sequence: a_i >= r_i violated");
  }
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (seq.r[i] < seq.r[i + 1])
      throw std::invalid_argument("sequence: r must be weakly decreasing");
    if (seq.a[i] >= seq.a[i + 1] && seq.r[i] <= seq.r[i + 1])
      throw std::invalid_argument("sequence: r_i > r_{i+1} required when a_i >= a_{i+1}");
  }
}

BoundedCompatibleSequence pd_to_sequence(const PipeDream& pd) {
  BoundedCompatibleSequence seq;
  for (int i = pd.size(); i >= 1; --i)
    for (int j = 1; i + j <= pd.size(); ++j)
      if (pd.has_cross(i, j)) {
        seq.a.push_back(i + j - 1);
        seq.r.push_back(i);
      }
  validate_sequence(seq);
  return seq;
}

PipeDream sequence_to_pd(const BoundedCompatibleSequence& seq, int n) {
  validate_sequence(seq);
  CellSet crosses;
  for (std::size_t i = 0; i < seq.a.size(); ++i) {
    if (seq.a[i] > n - 1)
      throw std::invalid_argument("sequence: a_i exceeds n - 1");
    const Cell c{seq.r[i], seq.a[i] + 1 - seq.r[i]};
    if (!crosses.insert(c).second)
      throw std::invalid_argument("sequence: duplicate cross at " + to_string(c));
  }
  return PipeDream(n, crosses);
}

PdRouting trace(const PipeDream& pd) {
  const int n = pd.size();
  PdRouting routing;
  routing.paths.resize(static_cast<std::size_t>(n));
  routing.exit_row_pipe.assign(static_cast<std::size_t>(n), 0);
  std::map<Cell, int> ns_pipe, ew_pipe;

  for (int pipe = 1; pipe <= n; ++pipe) {
    int i = 1, j = pipe;
    enum class Heading { South, West } heading = Heading::South;
    while (true) {
      const Cell cell{i, j};
      routing.paths[static_cast<std::size_t>(pipe) - 1].push_back(cell);
      const bool cross = pd.has_cross(i, j);
      if (cross) {
        if (heading == Heading::South)
          ns_pipe[cell] = pipe;
        else
          ew_pipe[cell] = pipe;
      } else {
        // Elbow: north joins west, east joins south.
        heading = heading == Heading::South ? Heading::West : Heading::South;
      }
      if (heading == Heading::West && j == 1) {
        routing.exit_row_pipe[static_cast<std::size_t>(i) - 1] = pipe;
        break;
      }
      if (heading == Heading::South)
        ++i;
      else
        --j;
      if (i + j > n + 1)
        throw std::logic_error("pipe dream: pipe left the staircase");
    }
  }
  for (const auto& [cell, pipe] : ns_pipe) {
    auto it = ew_pipe.find(cell);
    if (it == ew_pipe.end())
      throw std::logic_error("pipe dream: cross traversed by only one strand");
    routing.crossings[cell] = {pipe, it->second};
  }
  return routing;
}

bool is_reduced(const PipeDream& pd) {
  const PdRouting routing = trace(pd);
  std::set<std::pair<int, int>> pairs;
  for (const auto& [cell, pq] : routing.crossings) {
    auto pair = std::minmax(pq.first, pq.second);
    if (!pairs.insert({pair.first, pair.second}).second) return false;
  }
  return true;
}

Permutation permutation(const PipeDream& pd) {
  if (!is_reduced(pd))
    throw std::invalid_argument("pipe dream: permutation is only defined for reduced pipe dreams");
  return Permutation(trace(pd).exit_row_pipe);
}

bool is_pseudo_yamanouchi(const BoundedCompatibleSequence& seq, int n) {
  validate_sequence(seq);
  std::vector<int> cnt(static_cast<std::size_t>(n), 0);  // cnt[j-1] over the prefix
  for (int value : seq.a) {
    if (value > n - 1) throw std::invalid_argument("sequence: a_i exceeds n - 1");
    ++cnt[static_cast<std::size_t>(value) - 1];
    for (int j = 1; j <= n - 2; ++j)
      if (1 + cnt[static_cast<std::size_t>(j) - 1] < cnt[static_cast<std::size_t>(j)])
        return false;
  }
  return true;
}

bool is_pseudo_yamanouchi(const PipeDream& pd) {
  return is_pseudo_yamanouchi(pd_to_sequence(pd), pd.size());
}

PipeDream bottom_pd(const Permutation& pi) {
  const std::vector<int> code = pi.lehmer_code();
  CellSet crosses;
  for (int i = 1; i <= pi.size(); ++i)
    for (int j = 1; j <= code[static_cast<std::size_t>(i) - 1]; ++j)
      crosses.insert(Cell{i, j});
  return PipeDream(pi.size(), crosses);
}

std::vector<PipeDream> simple_slides(const PipeDream& pd) {
  const int n = pd.size();
  std::vector<PipeDream> out;
  for (int r = 2; r < n; ++r) {
    for (int c = 1; r + c <= n; ++c) {
      if (!pd.has_cross(r, c)) continue;
      if (pd.has_cross(r - 1, c) || pd.has_cross(r - 1, c + 1) || pd.has_cross(r, c + 1))
        continue;
      PipeDream moved = pd;
      moved.bits_ &= ~(static_cast<unsigned __int128>(1) << PipeDream::cell_index(n, r, c));
      moved.bits_ |= static_cast<unsigned __int128>(1) << PipeDream::cell_index(n, r - 1, c + 1);
      out.push_back(moved);
    }
  }
  return out;
}

std::vector<PipeDream> inverse_simple_slides(const PipeDream& pd) {
  const int n = pd.size();
  std::vector<PipeDream> out;
  for (int r = 1; r < n; ++r) {
    for (int c = 2; r + c <= n; ++c) {
      if (!pd.has_cross(r, c)) continue;
      // Inverse move target (r+1, c-1); the other three 2x2 cells are elbows.
      if (pd.has_cross(r + 1, c - 1) || pd.has_cross(r, c - 1) || pd.has_cross(r + 1, c))
        continue;
      PipeDream moved = pd;
      moved.bits_ &= ~(static_cast<unsigned __int128>(1) << PipeDream::cell_index(n, r, c));
      moved.bits_ |= static_cast<unsigned __int128>(1) << PipeDream::cell_index(n, r + 1, c - 1);
      out.push_back(moved);
    }
  }
  return out;
}

Poset slide_poset(const Permutation& pi) {
  return move_closure(
      bottom_pd(pi), [](const PipeDream& d) { return simple_slides(d); },
      [](const PipeDream& d) { return d.key(); },
      [](const PipeDream& d) { return d.cross_weight().str(); });
}

PipeDream top_pd(const Permutation& pi) {
  if (contains_pattern(pi, Permutation({1, 4, 3, 2})))
    throw std::invalid_argument("top pipe dream: permutation contains 1432");
  const Poset poset = slide_poset(pi);
  const std::vector<int> maxima = poset.maximal_elements();
  if (maxima.size() != 1)
    throw std::runtime_error("top pipe dream: slide poset has no unique maximal element");
  const PipeDream top =
      PipeDream::parse(poset.elements()[static_cast<std::size_t>(maxima.front())].key);
  // Crosses must be top-justified in their columns.
  for (int j = 1; j < pi.size(); ++j) {
    bool gap = false;
    for (int i = 1; i + j <= pi.size(); ++i) {
      if (!top.has_cross(i, j))
        gap = true;
      else if (gap)
        throw std::runtime_error("top pipe dream: crosses are not top-justified");
    }
  }
  return top;
}

void enumerate_pd(int n, const std::function<void(const PipeDream&)>& yield) {
  if (n < 1 || n > 7) throw std::invalid_argument("enumerate_pd: n must be in 1..7");
  const int cells = PipeDream::staircase_cells(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits)
    yield(PipeDream(n, bits));
}

void enumerate_pd_red(const Permutation& pi,
                      const std::function<void(const PipeDream&)>& yield) {
  enumerate_pd(pi.size(), [&](const PipeDream& pd) {
    if (pd.cross_count() != pi.inversions()) return;  // cheap filter
    if (!is_reduced(pd)) return;
    if (trace(pd).exit_row_pipe == pi.word()) yield(pd);
  });
}

std::vector<PipeDream> all_pd_red(const Permutation& pi) {
  std::vector<PipeDream> out;
  enumerate_pd_red(pi, [&](const PipeDream& pd) { out.push_back(pd); });
  return out;
}

}  // namespace schubcomb
