#include "pcarr/canonical.hpp"

#include <charconv>
#include <cstring>

namespace pcarr {

namespace {

// One rooted BFS emission with early comparison against the current best.
// Returns -1 if the candidate is lexicographically smaller than best,
// 0 if equal, +1 if larger (aborts early in that case).
// On -1 the candidate is written into best.
int run_root(const std::vector<Dart>& rot, const std::vector<Dart>& alpha, Dart root,
             std::vector<uint16_t>& best, bool best_valid, std::vector<int>& label,
             std::vector<Dart>& order, std::vector<uint16_t>& cand) {
  const size_t nd = alpha.size();
  std::fill(label.begin(), label.end(), -1);
  label[root] = 0;
  order[0] = root;
  int next_label = 1;
  size_t out = 0;
  bool better = !best_valid;

  for (size_t pop = 0; pop < nd; ++pop) {
    Dart d = order[pop];
    Dart s = rot[d];
    if (label[s] < 0) {
      label[s] = next_label;
      order[next_label++] = s;
    }
    Dart a = alpha[d];
    if (label[a] < 0) {
      label[a] = next_label;
      order[next_label++] = a;
    }
    uint16_t vals[2] = {(uint16_t)label[a], (uint16_t)label[s]};
    for (uint16_t v : vals) {
      if (!better) {
        if (v < best[out]) {
          better = true;
        } else if (v > best[out]) {
          return +1;
        }
      }
      cand[out++] = v;
    }
  }
  if (better) {
    best.assign(cand.begin(), cand.end());
    return -1;
  }
  return 0;
}

std::pair<std::vector<uint16_t>, int> canonical_sequence(const Arrangement& arr) {
  const size_t nd = arr.map.dart_count();
  std::vector<Dart> sigma_inv(nd);
  for (Dart d = 0; d < nd; ++d) sigma_inv[arr.map.sigma[d]] = d;

  std::vector<uint16_t> best(2 * nd), cand(2 * nd);
  std::vector<int> label(nd);
  std::vector<Dart> order(nd);
  bool best_valid = false;
  int aut = 0;

  for (int o = 0; o < 2; ++o) {
    const std::vector<Dart>& rot = o == 0 ? arr.map.sigma : sigma_inv;
    for (Dart r = 0; r < nd; ++r) {
      int c = run_root(rot, arr.map.alpha, r, best, best_valid, label, order, cand);
      if (c < 0) {
        best_valid = true;
        aut = 1;
      } else if (c == 0) {
        ++aut;
      }
    }
  }
  return {best, aut};
}

}  // namespace

CanonicalCode canonical_code(const Arrangement& arr) {
  return canonical_code_and_order(arr).first;
}

int automorphism_order(const Arrangement& arr) {
  return canonical_sequence(arr).second;
}

std::pair<CanonicalCode, int> canonical_code_and_order(const Arrangement& arr) {
  auto [seq, aut] = canonical_sequence(arr);
  std::string text = "PC1:n=" + std::to_string(arr.n) + ":";
  char buf[8];
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) text.push_back('.');
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, seq[i]);
    text.append(buf, p);
  }
  return {CanonicalCode{std::move(text)}, aut};
}

Arrangement parse_code(const std::string& text) {
  const char* p = text.c_str();
  if (std::strncmp(p, "PC1:n=", 6) != 0)
    throw Error(Err::ParseError, "code must start with PC1:n=");
  p += 6;
  char* end = nullptr;
  long n = std::strtol(p, &end, 10);
  if (end == p || *end != ':')
    throw Error(Err::ParseError, "malformed circle count");
  p = end + 1;

  std::vector<uint32_t> seq;
  while (*p) {
    long v = std::strtol(p, &end, 10);
    if (end == p) throw Error(Err::ParseError, "malformed code entry");
    if (v < 0) throw Error(Err::ParseError, "negative code entry");
    seq.push_back((uint32_t)v);
    p = end;
    if (*p == '.') ++p;
    else if (*p) throw Error(Err::ParseError, "unexpected character in code");
  }
  if (seq.empty() || seq.size() % 2 != 0)
    throw Error(Err::ParseError, "code length must be even");
  const size_t nd = seq.size() / 2;
  CombinatorialMap m;
  m.sigma.resize(nd);
  m.alpha.resize(nd);
  for (size_t d = 0; d < nd; ++d) {
    if (seq[2 * d] >= nd || seq[2 * d + 1] >= nd)
      throw Error(Err::ParseError, "code label out of range");
    m.alpha[d] = seq[2 * d];
    m.sigma[d] = seq[2 * d + 1];
  }
  Arrangement arr = validate(m);
  if (arr.n != n)
    throw Error(Err::ParseError, "circle count does not match code body");
  return arr;
}

CombinatorialMap relabel(const CombinatorialMap& m, const std::vector<Dart>& perm) {
  const size_t nd = m.dart_count();
  CombinatorialMap out;
  out.sigma.resize(nd);
  out.alpha.resize(nd);
  for (Dart d = 0; d < nd; ++d) {
    out.sigma[perm[d]] = perm[m.sigma[d]];
    out.alpha[perm[d]] = perm[m.alpha[d]];
  }
  return out;
}

CombinatorialMap mirror(const CombinatorialMap& m) {
  CombinatorialMap out = m;
  for (Dart d = 0; d < m.dart_count(); ++d) out.sigma[m.sigma[d]] = d;
  return out;
}

}  // namespace pcarr
