#include "cyclebetti/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "cyclebetti/errors.hpp"

namespace cyclebetti {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

void require_field(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidParameter("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) {
    throw InvalidParameter("characteristic " + std::to_string(p) + " exceeds 2^31");
  }
}

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidParameter("the zero ideal has no Betti table here");
  if (ideal.is_unit()) throw InvalidParameter("the unit ideal has no Betti table here");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  a %= p;
  while (e) {
    if (e & 1U) result = result * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool LcmLattice::contains(const Monomial& m) const {
  return std::binary_search(elements_.begin(), elements_.end(), m);
}

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  require_proper_nonzero(ideal);
  const auto& gens = ideal.generators();
  std::set<Monomial> seen(gens.begin(), gens.end());
  if (seen.size() > cap) throw ResourceCapExceeded("lcm lattice exceeds cap of " + std::to_string(cap));

  // Every join of a subset is reached by joining one generator at a time.
  std::vector<Monomial> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        Monomial h = lcm_of(f, g);
        if (seen.insert(h).second) {
          if (seen.size() > cap) {
            throw ResourceCapExceeded("lcm lattice exceeds cap of " + std::to_string(cap));
          }
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return LcmLattice(std::vector<Monomial>(seen.begin(), seen.end()));
}

SimplicialComplex::SimplicialComplex(std::vector<std::size_t> vertices,
                                     std::vector<std::vector<Face>> by_dim)
    : vertices_(std::move(vertices)), faces_(std::move(by_dim)) {
  for (auto& layer : faces_) std::sort(layer.begin(), layer.end());
  while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
}

const std::vector<Face>& SimplicialComplex::faces(int dim) const {
  static const std::vector<Face> kNone;
  const int slot = dim + 1;
  if (slot < 0 || slot >= static_cast<int>(faces_.size())) return kNone;
  return faces_[static_cast<std::size_t>(slot)];
}

std::size_t SimplicialComplex::face_count(int dim) const { return faces(dim).size(); }

std::size_t SimplicialComplex::total_faces() const {
  std::size_t n = 0;
  for (const auto& layer : faces_) n += layer.size();
  return n;
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& b) {
  if (ideal.ambient() != b.ambient()) throw AmbientMismatch("upper Koszul: ambient mismatch");
  const std::vector<std::size_t> verts = b.support();
  if (verts.size() > 24) throw ResourceCapExceeded("upper Koszul complex on more than 24 vertices");
  if (!ideal.contains(b)) return SimplicialComplex(verts, {});

  const std::size_t k = verts.size();
  std::vector<std::vector<Face>> by_dim(k + 1);
  std::vector<Exponent> e(b.exponents().begin(), b.exponents().end());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Exponent> shifted = e;
    Face face;
    for (std::size_t v = 0; v < k; ++v) {
      if (mask >> v & 1U) {
        shifted[verts[v]] -= 1;
        face.push_back(verts[v]);
      }
    }
    if (ideal.contains(Monomial(std::move(shifted)))) {
      by_dim[static_cast<std::size_t>(std::popcount(mask))].push_back(std::move(face));
    }
  }
  return SimplicialComplex(verts, std::move(by_dim));
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = inverse_mod(rows[rank][c], p);
    for (std::size_t c2 = c; c2 < cols; ++c2) {
      rows[rank][c2] = static_cast<std::uint32_t>(rows[rank][c2] * inv % p);
    }
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t factor = rows[r][c];
      if (factor == 0) continue;
      for (std::size_t c2 = c; c2 < cols; ++c2) {
        const std::uint64_t sub = factor * rows[rank][c2] % p;
        rows[r][c2] = static_cast<std::uint32_t>((rows[r][c2] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

/// Rank of the boundary map from dimension `dim` faces to `dim - 1` faces.
std::size_t boundary_rank(const SimplicialComplex& complex, int dim, std::uint64_t p) {
  const auto& upper = complex.faces(dim);
  const auto& lower = complex.faces(dim - 1);
  if (upper.empty() || lower.empty()) return 0;
  std::map<Face, std::size_t> index;
  for (std::size_t k = 0; k < lower.size(); ++k) index.emplace(lower[k], k);

  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(upper.size());
  const auto minus_one = static_cast<std::uint32_t>(p - 1);
  for (const auto& face : upper) {
    std::vector<std::uint32_t> row(lower.size(), 0);
    for (std::size_t drop = 0; drop < face.size(); ++drop) {
      Face sub;
      sub.reserve(face.size() - 1);
      for (std::size_t k = 0; k < face.size(); ++k) {
        if (k != drop) sub.push_back(face[k]);
      }
      auto it = index.find(sub);
      if (it == index.end()) throw InternalFault("simplicial complex is not downward closed");
      row[it->second] = drop % 2 == 0 ? 1U : minus_one;
    }
    rows.push_back(std::move(row));
  }
  return rank_mod_p(std::move(rows), p);
}

}  // namespace

std::vector<std::uint64_t> homology_dims(const SimplicialComplex& complex, std::uint64_t p) {
  require_field(p);
  if (complex.is_void()) return {};
  const int top = complex.dimension();
  // ranks[d + 1] = rank of the boundary out of dimension d, d = -1..top+1.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);
  for (int d = 0; d <= top; ++d) ranks[static_cast<std::size_t>(d + 1)] = boundary_rank(complex, d, p);

  std::vector<std::uint64_t> dims;
  for (int d = -1; d <= top; ++d) {
    const std::size_t chains = complex.face_count(d);
    const std::size_t out = ranks[static_cast<std::size_t>(d + 1)];
    const std::size_t in = ranks[static_cast<std::size_t>(d + 2)];
    if (chains < out + in) throw InternalFault("negative homology dimension");
    dims.push_back(chains - out - in);
  }
  return dims;
}

void GradedBettiTable::add(int i, int j, const BigInt& value) {
  if (value < 0) throw InternalFault("negative Betti number");
  if (value == 0) return;
  entries_[{i, j}] += value;
}

BigInt GradedBettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt GradedBettiTable::total(int i) const {
  BigInt sum = 0;
  for (auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
       it != entries_.end() && it->first.first == i; ++it) {
    sum += it->second;
  }
  return sum;
}

std::vector<BigInt> GradedBettiTable::totals() const {
  std::vector<BigInt> out;
  for (int i = 0; i <= pd(); ++i) out.push_back(total(i));
  return out;
}

int GradedBettiTable::pd() const { return entries_.empty() ? -1 : entries_.rbegin()->first.first; }

int GradedBettiTable::reg() const {
  if (entries_.empty()) throw InvalidParameter("regularity of an empty Betti table");
  int r = std::numeric_limits<int>::min();
  for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
  return r;
}

int GradedBettiTable::min_row() const {
  if (entries_.empty()) throw InvalidParameter("rows of an empty Betti table");
  int r = std::numeric_limits<int>::max();
  for (const auto& [key, v] : entries_) r = std::min(r, key.second - key.first);
  return r;
}

bool GradedBettiTable::is_linear(int d) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [d](const auto& kv) { return kv.first.second - kv.first.first == d; });
}

GradedBettiTable GradedBettiTable::linear(const std::vector<BigInt>& totals, int degree) {
  GradedBettiTable out;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    const int ii = static_cast<int>(i);
    out.add(ii, ii + degree, totals[i]);
  }
  return out;
}

GradedBettiTable graded_betti(const MonomialIdeal& ideal, const OracleOptions& options) {
  require_field(options.prime);
  const LcmLattice lattice = lcm_lattice(ideal, options.lattice_cap);
  const auto& points = lattice.elements();

  std::vector<std::vector<std::uint64_t>> dims(points.size());
  auto work = [&](std::size_t k) { dims[k] = homology_dims(upper_koszul(ideal, points[k]), options.prime); };

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1 || points.size() < 2) {
    for (std::size_t k = 0; k < points.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < points.size(); k = next++) {
          try {
            work(k);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Merge in lattice order so the result is independent of scheduling.
  GradedBettiTable table;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const int degree = static_cast<int>(points[k].degree());
    for (std::size_t slot = 0; slot < dims[k].size(); ++slot) {
      if (dims[k][slot] != 0) table.add(static_cast<int>(slot), degree, BigInt(dims[k][slot]));
    }
  }
  return table;
}

}  // namespace cyclebetti
