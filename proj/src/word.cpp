#include "booklink/word.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

namespace booklink {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::PositionError: return "PositionError";
    case ErrorCode::ClosureError: return "ClosureError";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::NoSuchSite: return "NoSuchSite";
    case ErrorCode::MultiComponent: return "MultiComponent";
    case ErrorCode::TooManyCrossings: return "TooManyCrossings";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NotDestabilizable: return "NotDestabilizable";
    case ErrorCode::NotStabilizable: return "NotStabilizable";
    case ErrorCode::NoFreeStrand: return "NoFreeStrand";
    case ErrorCode::NotAPlat: return "NotAPlat";
    case ErrorCode::NoBackwardArc: return "NoBackwardArc";
    case ErrorCode::InvalidChoice: return "InvalidChoice";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotDecreasing: return "NotDecreasing";
    case ErrorCode::MissingPenultimateOne: return "MissingPenultimateOne";
    case ErrorCode::NoTerminalZero: return "NoTerminalZero";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Missing: return "Missing";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotA12Representative: return "NotA12Representative";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::IdentityMismatch: return "IdentityMismatch";
    case ErrorCode::RowMismatch: return "RowMismatch";
    case ErrorCode::MissingWitness: return "MissingWitness";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

int SliceProfile::min_count() const {
  return *std::min_element(counts.begin(), counts.end());
}

std::string token_of(const Generator& g) {
  switch (g.kind) {
    case GenKind::CrossingPos: return "x" + std::to_string(g.position) + "+";
    case GenKind::CrossingNeg: return "x" + std::to_string(g.position) + "-";
    case GenKind::Cap: return "cap" + std::to_string(g.position);
    case GenKind::Cup: return "cup" + std::to_string(g.position);
  }
  return {};
}

namespace {

Generator parse_token(std::string_view tok, int index) {
  auto bad = [&](const char* why) -> Error {
    return Error(ErrorCode::SyntaxError,
                 "token " + std::to_string(index) + " '" + std::string(tok) +
                     "': " + why);
  };
  GenKind kind;
  std::string_view digits;
  if (tok.size() >= 2 && tok.front() == 'x') {
    char sign = tok.back();
    if (sign == '+') {
      kind = GenKind::CrossingPos;
    } else if (sign == '-') {
      kind = GenKind::CrossingNeg;
    } else {
      throw bad("crossing must end in + or -");
    }
    digits = tok.substr(1, tok.size() - 2);
  } else if (tok.starts_with("cap")) {
    kind = GenKind::Cap;
    digits = tok.substr(3);
  } else if (tok.starts_with("cup")) {
    kind = GenKind::Cup;
    digits = tok.substr(3);
  } else {
    throw bad("unknown generator");
  }
  int pos = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), pos);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || pos < 1) {
    throw bad("position must be a positive integer");
  }
  return Generator{kind, pos};
}

}  // namespace

BooklinkWord parse_word(std::string_view text) {
  // strip comments, gather tokens
  std::string stripped;
  stripped.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    stripped.push_back(comment ? ' ' : c);
  }
  std::istringstream in(stripped);
  std::string tok;
  if (!(in >> tok) || !tok.starts_with("strands:")) {
    throw Error(ErrorCode::SyntaxError, "expected leading 'strands:<k>' line");
  }
  BooklinkWord w;
  {
    std::string_view digits = std::string_view(tok).substr(8);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), w.seam_strands);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || w.seam_strands < 0) {
      throw Error(ErrorCode::SyntaxError, "bad strand count '" + tok + "'");
    }
  }
  int index = 0;
  while (in >> tok) {
    w.gens.push_back(parse_token(tok, index++));
  }
  ValidationReport report = validate(w);
  if (!report.ok) {
    const Violation& v = report.violations.front();
    throw Error(v.code, v.message);
  }
  return w;
}

std::string serialize_word(const BooklinkWord& w) {
  std::string out = "strands:" + std::to_string(w.seam_strands) + "\n";
  for (size_t i = 0; i < w.gens.size(); ++i) {
    out += token_of(w.gens[i]);
    out += (i + 1 == w.gens.size()) ? "\n" : " ";
  }
  return out;
}

ValidationReport validate(const BooklinkWord& w) {
  ValidationReport report;
  int m = w.seam_strands;
  report.profile.counts.push_back(m);
  int caps = 0, cups = 0;
  for (size_t t = 0; t < w.gens.size(); ++t) {
    const Generator& g = w.gens[t];
    const int i = g.position;
    switch (g.kind) {
      case GenKind::CrossingPos:
      case GenKind::CrossingNeg:
        if (m < i + 1) {
          report.violations.push_back(
              {ErrorCode::PositionError, static_cast<int>(t),
               "crossing at position " + std::to_string(i) + " needs " +
                   std::to_string(i + 1) + " strands, slice has " + std::to_string(m)});
        }
        break;
      case GenKind::Cap:
        if (m < i + 1) {
          report.violations.push_back(
              {ErrorCode::PositionError, static_cast<int>(t),
               "cap at position " + std::to_string(i) + " needs " +
                   std::to_string(i + 1) + " strands, slice has " + std::to_string(m)});
        }
        m -= 2;
        ++caps;
        break;
      case GenKind::Cup:
        if (i > m + 1) {
          report.violations.push_back(
              {ErrorCode::PositionError, static_cast<int>(t),
               "cup at position " + std::to_string(i) + " exceeds " +
                   std::to_string(m + 1)});
        }
        m += 2;
        ++cups;
        break;
    }
    report.profile.counts.push_back(m);
    if (m < 0) break;  // later positions are meaningless
  }
  if (m != w.seam_strands) {
    report.violations.push_back(
        {ErrorCode::ClosureError, -1,
         "final strand count " + std::to_string(m) + " != seam " +
             std::to_string(w.seam_strands)});
  }
  if (caps != cups) {
    report.violations.push_back(
        {ErrorCode::ParityError, -1,
         std::to_string(caps) + " caps vs " + std::to_string(cups) + " cups"});
  }
  report.ok = report.violations.empty();
  return report;
}

SliceProfile slice_profile(const BooklinkWord& w) {
  ValidationReport report = validate(w);
  if (!report.ok) {
    throw Error(ErrorCode::InvalidWord, report.violations.front().message);
  }
  return report.profile;
}

int bridge_index(const BooklinkWord& w) {
  slice_profile(w);
  return static_cast<int>(
      std::count_if(w.gens.begin(), w.gens.end(),
                    [](const Generator& g) { return g.kind == GenKind::Cap; }));
}

int braid_count(const BooklinkWord& w) { return slice_profile(w).min_count(); }

namespace {

// union-find with a direction-flip parity on each link
class ParityDsu {
 public:
  explicit ParityDsu(int n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    int root = x, par = 0;
    while (parent_[root] != root) {
      par ^= parity_[root];
      root = parent_[root];
    }
    int acc = par;
    while (parent_[x] != root) {
      int nx = parent_[x], np = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= np;
      x = nx;
    }
    return {root, par};
  }

  void unite(int a, int b, int flip) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      // the word semantics guarantee a consistent direction assignment
      assert((pa ^ pb) == flip);
      return;
    }
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ flip;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

}  // namespace

ComponentTrace trace_components(const BooklinkWord& w) {
  SliceProfile profile = slice_profile(w);
  const int T = static_cast<int>(w.gens.size());
  ComponentTrace out;
  if (T == 0) {
    out.component_count = w.seam_strands;
    out.component.assign(1, std::vector<int>(w.seam_strands + 1, -1));
    out.direction.assign(1, std::vector<int>(w.seam_strands + 1, 1));
    for (int k = 1; k <= w.seam_strands; ++k) out.component[0][k] = k - 1;
    return out;
  }
  std::vector<int> offset(T + 1, 0);
  for (int s = 0; s < T; ++s) offset[s + 1] = offset[s] + profile.counts[s];
  auto seg = [&](int s, int k) { return offset[s] + k - 1; };
  ParityDsu dsu(offset[T]);
  for (int t = 1; t <= T; ++t) {
    const Generator& g = w.gens[t - 1];
    const int s0 = t - 1, s1 = t % T;
    const int m = profile.counts[t - 1];
    const int i = g.position;
    if (g.is_crossing()) {
      dsu.unite(seg(s0, i), seg(s1, i + 1), 0);
      dsu.unite(seg(s0, i + 1), seg(s1, i), 0);
      for (int k = 1; k <= m; ++k) {
        if (k != i && k != i + 1) dsu.unite(seg(s0, k), seg(s1, k), 0);
      }
    } else if (g.kind == GenKind::Cap) {
      dsu.unite(seg(s0, i), seg(s0, i + 1), 1);
      for (int k = 1; k <= m; ++k) {
        if (k < i) dsu.unite(seg(s0, k), seg(s1, k), 0);
        else if (k > i + 1) dsu.unite(seg(s0, k), seg(s1, k - 2), 0);
      }
    } else {
      dsu.unite(seg(s1, i), seg(s1, i + 1), 1);
      for (int k = 1; k <= m; ++k) {
        if (k < i) dsu.unite(seg(s0, k), seg(s1, k), 0);
        else dsu.unite(seg(s0, k), seg(s1, k + 2), 0);
      }
    }
  }
  out.component.assign(T, {});
  out.direction.assign(T, {});
  std::vector<int> comp_of_root(offset[T], -1);
  int ncomp = 0;
  for (int s = 0; s < T; ++s) {
    out.component[s].assign(profile.counts[s] + 1, -1);
    out.direction[s].assign(profile.counts[s] + 1, 0);
    for (int k = 1; k <= profile.counts[s]; ++k) {
      auto [root, par] = dsu.find(seg(s, k));
      if (comp_of_root[root] < 0) comp_of_root[root] = ncomp++;
      out.component[s][k] = comp_of_root[root];
      out.direction[s][k] = par == 0 ? 1 : -1;
    }
  }
  out.component_count = ncomp;
  return out;
}

BooklinkWord mirror(const BooklinkWord& w) {
  BooklinkWord out = w;
  for (Generator& g : out.gens) {
    if (g.kind == GenKind::CrossingPos) g.kind = GenKind::CrossingNeg;
    else if (g.kind == GenKind::CrossingNeg) g.kind = GenKind::CrossingPos;
  }
  return out;
}

BooklinkWord rotate(const BooklinkWord& w, int k) {
  SliceProfile profile = slice_profile(w);
  const int T = static_cast<int>(w.gens.size());
  if (T == 0) return w;
  k = ((k % T) + T) % T;
  BooklinkWord out;
  out.seam_strands = profile.counts[k];
  out.gens.reserve(w.gens.size());
  for (int t = 0; t < T; ++t) out.gens.push_back(w.gens[(k + t) % T]);
  return out;
}

BooklinkWord align_min_to_seam(const BooklinkWord& w) {
  SliceProfile profile = slice_profile(w);
  const int T = static_cast<int>(w.gens.size());
  int best = 0;
  for (int s = 0; s <= T; ++s) {
    if (profile.counts[s] < profile.counts[best]) best = s;
  }
  return rotate(w, best % std::max(T, 1));
}

BooklinkWord split_union(const BooklinkWord& w1, const BooklinkWord& w2) {
  if (braid_count(w1) != w1.seam_strands || braid_count(w2) != w2.seam_strands) {
    throw Error(ErrorCode::InvalidWord,
                "split_union inputs must be aligned (seam = braid count)");
  }
  BooklinkWord out;
  out.seam_strands = w1.seam_strands + w2.seam_strands;
  out.gens = w1.gens;
  for (Generator g : w2.gens) {
    g.position += w1.seam_strands;
    out.gens.push_back(g);
  }
  return out;
}

namespace {

int nth_generator_of_kind(const BooklinkWord& w, GenKind kind, int site) {
  int seen = 0;
  for (size_t t = 0; t < w.gens.size(); ++t) {
    if (w.gens[t].kind == kind) {
      if (seen == site) return static_cast<int>(t);
      ++seen;
    }
  }
  throw Error(ErrorCode::NoSuchSite,
              "no " + std::string(kind == GenKind::Cap ? "cap" : "cup") +
                  " with index " + std::to_string(site));
}

// Raise the final cap to join the two outermost strands, sliding bystander
// strands under the doomed pair (a Reidemeister-2 pair per step).
void raise_final_cap(BooklinkWord& w) {
  const int m = w.seam_strands + 2;  // strand count at the cap's slice
  while (w.gens.back().position < m - 1) {
    const int i = w.gens.back().position;
    w.gens.pop_back();
    w.gens.push_back({GenKind::CrossingPos, i + 1});
    w.gens.push_back({GenKind::CrossingPos, i});
    w.gens.push_back({GenKind::Cap, i + 1});
  }
}

// Lower the leading cup to position 1, symmetric to raise_final_cap.
void lower_leading_cup(BooklinkWord& w) {
  while (w.gens.front().position > 1) {
    const int j = w.gens.front().position;
    w.gens.erase(w.gens.begin());
    w.gens.insert(w.gens.begin(), {Generator{GenKind::Cup, j - 1},
                                   Generator{GenKind::CrossingPos, j},
                                   Generator{GenKind::CrossingPos, j - 1}});
  }
}

}  // namespace

BooklinkWord connected_sum(const BooklinkWord& w1, const BooklinkWord& w2,
                           int cap_site, int cup_site) {
  if (trace_components(w1).component_count != 1 ||
      trace_components(w2).component_count != 1) {
    throw Error(ErrorCode::MultiComponent, "connected_sum requires knots");
  }
  const int cap_at = nth_generator_of_kind(w1, GenKind::Cap, cap_site);
  const int cup_at = nth_generator_of_kind(w2, GenKind::Cup, cup_site);

  BooklinkWord a = rotate(w1, cap_at + 1);  // chosen cap last
  BooklinkWord b = rotate(w2, cup_at);      // chosen cup first
  raise_final_cap(a);
  lower_leading_cup(b);

  BooklinkWord out;
  out.seam_strands = a.seam_strands + b.seam_strands;
  out.gens.assign(a.gens.begin(), a.gens.end() - 1);  // drop the cap
  for (size_t t = 1; t < b.gens.size(); ++t) {        // drop the cup
    Generator g = b.gens[t];
    g.position += a.seam_strands;
    out.gens.push_back(g);
  }
  assert(validate(out).ok);
  return out;
}

}  // namespace booklink
