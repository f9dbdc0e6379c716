#include "schubcomb/bpd.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "schubcomb/asm_matrix.hpp"

namespace schubcomb {

namespace {

constexpr std::array<char, 6> kTileChars = {'.', '-', '|', '+', 'r', 'j'};

// Edge incidence per tile kind: N, S, E, W.
constexpr std::array<std::array<bool, 4>, 6> kEdges = {{
    {false, false, false, false},  // Blank
    {false, false, true, true},    // Horizontal
    {true, true, false, false},    // Vertical
    {true, true, true, true},      // Cross
    {false, true, true, false},    // SeElbow
    {true, false, false, true},    // NwElbow
}};

}  // namespace

char tile_char(Tile t) { return kTileChars[static_cast<std::size_t>(t)]; }

Tile tile_from_char(char c) {
  for (std::size_t k = 0; k < kTileChars.size(); ++k)
    if (kTileChars[k] == c) return static_cast<Tile>(k);
  throw std::invalid_argument(std::string("bpd: unknown tile character '") + c + "'");
}

bool tile_north(Tile t) { return kEdges[static_cast<std::size_t>(t)][0]; }
bool tile_south(Tile t) { return kEdges[static_cast<std::size_t>(t)][1]; }
bool tile_east(Tile t) { return kEdges[static_cast<std::size_t>(t)][2]; }
bool tile_west(Tile t) { return kEdges[static_cast<std::size_t>(t)][3]; }

Bpd::Bpd(int n, std::vector<Tile> tiles) : n_(n), tiles_(std::move(tiles)) {
  if (n_ < 1) throw std::invalid_argument("bpd: size must be >= 1");
  if (tiles_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
    throw std::invalid_argument("bpd: tile array does not match the grid size");
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      const Tile t = at(i, j);
      // Interior edges must match; border edges follow the south-to-east
      // pipe profile: nothing on the north and west borders, a pipe on every
      // south and east border edge.
      const bool north_ok =
          (i == 1) ? !tile_north(t) : tile_north(t) == tile_south(at(i - 1, j));
      const bool west_ok = (j == 1) ? !tile_west(t) : tile_west(t) == tile_east(at(i, j - 1));
      const bool south_ok = (i == n_) ? tile_south(t) : true;
      const bool east_ok = (j == n_) ? tile_east(t) : true;
      if (!north_ok || !west_ok || !south_ok || !east_ok)
        throw std::invalid_argument("bpd: tiling is inconsistent at cell " +
                                    to_string(Cell{i, j}));
    }
  }
}

Bpd Bpd::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n' || c == '/') {
      if (!current.empty()) lines.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  const int n = static_cast<int>(lines.size());
  std::vector<Tile> tiles;
  tiles.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const std::string& line : lines) {
    if (static_cast<int>(line.size()) != n)
      throw std::invalid_argument("bpd: expected a square character grid");
    for (char c : line) tiles.push_back(tile_from_char(c));
  }
  return Bpd(n, std::move(tiles));
}

CellSet Bpd::blanks() const {
  CellSet out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (at(i, j) == Tile::Blank) out.insert(Cell{i, j});
  return out;
}

Monomial Bpd::blank_weight() const {
  Monomial w;
  for (const Cell& c : blanks()) w *= Monomial::var(c.row);
  return w;
}

std::string Bpd::str() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out += tile_char(at(i, j));
    out += '\n';
  }
  return out;
}

std::string Bpd::key() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += '/';
    for (int j = 1; j <= n_; ++j) out += tile_char(at(i, j));
  }
  return out;
}

BpdRouting trace_pipes(const Bpd& bpd) {
  const int n = bpd.size();
  BpdRouting routing;
  routing.paths.resize(static_cast<std::size_t>(n));
  routing.exit_row_pipe.assign(static_cast<std::size_t>(n), 0);
  std::map<Cell, int> vertical_pipe, horizontal_pipe;

  for (int pipe = 1; pipe <= n; ++pipe) {
    int i = n, j = pipe;
    enum class Heading { North, East } heading = Heading::North;
    while (true) {
      if (i < 1 || j > n)
        throw std::invalid_argument("bpd: pipe escaped through the north or west border");
      const Cell cell{i, j};
      const Tile t = bpd.at(i, j);
      routing.paths[static_cast<std::size_t>(pipe) - 1].push_back(cell);
      if (heading == Heading::North) {
        // Entering from the south edge.
        switch (t) {
          case Tile::SeElbow:
            heading = Heading::East;
            break;
          case Tile::Vertical:
            break;
          case Tile::Cross:
            vertical_pipe[cell] = pipe;
            break;
          default:
            throw std::invalid_argument("bpd: pipe hit a tile with no south edge at " +
                                        to_string(cell));
        }
      } else {
        // Entering from the west edge.
        switch (t) {
          case Tile::NwElbow:
            heading = Heading::North;
            break;
          case Tile::Horizontal:
            break;
          case Tile::Cross:
            horizontal_pipe[cell] = pipe;
            break;
          default:
            throw std::invalid_argument("bpd: pipe hit a tile with no west edge at " +
                                        to_string(cell));
        }
      }
      if (heading == Heading::East && j == n) {
        routing.exit_row_pipe[static_cast<std::size_t>(i) - 1] = pipe;
        break;
      }
      if (heading == Heading::North)
        --i;
      else
        ++j;
    }
  }
  for (const auto& [cell, pipe] : vertical_pipe) {
    auto it = horizontal_pipe.find(cell);
    if (it == horizontal_pipe.end())
      throw std::logic_error("bpd: cross tile traversed by only one strand");
    routing.crossings[cell] = {pipe, it->second};
  }
  return routing;
}

bool is_reduced(const Bpd& bpd) {
  const BpdRouting routing = trace_pipes(bpd);
  std::set<std::pair<int, int>> pairs;
  for (const auto& [cell, pq] : routing.crossings) {
    auto pair = std::minmax(pq.first, pq.second);
    if (!pairs.insert({pair.first, pair.second}).second) return false;
  }
  return true;
}

Permutation permutation(const Bpd& bpd) {
  if (!is_reduced(bpd))
    throw std::invalid_argument("bpd: permutation is only defined for reduced BPDs");
  return Permutation(trace_pipes(bpd).exit_row_pipe);
}

Bpd rothe_bpd(const Permutation& pi) { return asm_to_bpd(Asm::permutation_matrix(pi)); }

std::vector<Bpd> simple_droops(const Bpd& bpd) {
  const int n = bpd.size();
  std::vector<Bpd> out;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (bpd.at(i, j) != Tile::SeElbow || bpd.at(i + 1, j + 1) != Tile::Blank) continue;
      const Tile ne = bpd.at(i, j + 1);      // exit side: east (-) or north (j)
      const Tile sw = bpd.at(i + 1, j);      // entry side: south (|) or west (j)
      const bool ne_ok = ne == Tile::Horizontal || ne == Tile::NwElbow;
      const bool sw_ok = sw == Tile::Vertical || sw == Tile::NwElbow;
      if (!ne_ok || !sw_ok) continue;
      std::vector<Tile> tiles = bpd.tiles();
      auto set = [&](int r, int c, Tile t) {
        tiles[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(c - 1)] = t;
      };
      set(i, j, Tile::Blank);
      set(i, j + 1, ne == Tile::Horizontal ? Tile::SeElbow : Tile::Vertical);
      set(i + 1, j, sw == Tile::Vertical ? Tile::SeElbow : Tile::Horizontal);
      set(i + 1, j + 1, Tile::NwElbow);
      out.emplace_back(n, std::move(tiles));  // constructor revalidates
    }
  }
  return out;
}

Poset droop_poset(const Permutation& pi) {
  const Bpd rothe = rothe_bpd(pi);
  return move_closure(
      rothe, [](const Bpd& d) { return simple_droops(d); },
      [](const Bpd& d) { return d.key(); },
      [](const Bpd& d) { return d.blank_weight().str(); });
}

}  // namespace schubcomb
