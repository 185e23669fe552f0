#include "halfshift/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "halfshift/diagram.hpp"
#include "halfshift/diagram_roots.hpp"
#include "halfshift/shapes.hpp"

namespace halfshift {

namespace {

// Word with row groups separated by '|', e.g. "s0 | s3 s2 s1 s0".
std::string word_groups(const ReducedWord& word,
                        const std::vector<int>& row_sizes) {
  std::ostringstream out;
  size_t pos = 0;
  bool first_group = true;
  for (int size : row_sizes) {
    if (size == 0) continue;
    if (!first_group) out << " | ";
    for (int i = 0; i < size; ++i) {
      if (i) out << ' ';
      out << 's' << word[pos++];
    }
    first_group = false;
  }
  return out.str();
}

}  // namespace

std::string render_diagram(const GrassmannianSpec& spec,
                           const DoublePartition& p) {
  const Diagram d = Diagram::build(spec, p);
  const SignedPermutation w = partition_to_permutation(spec, p);
  const ReducedWord word = row_reading_word(spec, p);
  const auto removals = enumerate_removals(spec, p);
  const auto roots = fill_diagram_roots(spec, p);
  const int k = spec.k, r = p.rows();
  const int cols = spec.staircase_cols();

  auto removable = [&](bool top, int t) {
    for (const auto& [rem, result] : removals)
      if ((rem.kind == Removal::Kind::Alpha) == top && rem.t == t) return true;
    return false;
  };

  std::ostringstream out;
  out << p.display() << " in " << spec.manifold_name() << "  [family "
      << family_char(spec.family) << ", n=" << spec.n << ", k=" << spec.k
      << "]\n";
  out << "dimension " << p.weight() << "\n\n";

  out << "top (alpha), " << k << "x" << spec.alpha_cols() << ":\n";
  for (int i = 1; i <= k; ++i) {
    out << "  ";
    const int a = p.alpha_part(i);
    for (int j = 1; j <= spec.alpha_cols(); ++j) {
      if (j <= a)
        out << (j == a && removable(true, i) ? "* " : "# ");
      else
        out << ". ";
    }
    out << "\n";
  }
  if (k == 0) out << "  (empty)\n";

  out << "bottom (lambda), staircase with " << cols << " columns:\n";
  for (int i = 1; i <= cols; ++i) {
    out << "  ";
    for (int j = 1; j <= cols; ++j) {
      if (j < i) {
        out << "  ";  // outside the staircase
        continue;
      }
      bool in_lambda =
          i <= r && j >= d.bottom_start(i) && j <= d.bottom_end(i);
      if (in_lambda) {
        const bool last = j == d.bottom_end(i);
        out << (last && removable(false, i) ? "* " : "# ");
      } else if (spec.family == Family::D && j == i && d.diagonal_filled(i)) {
        out << "+ ";
      } else {
        out << ". ";
      }
    }
    out << "\n";
  }
  out << "  ";
  for (int j = 1; j <= cols; ++j) out << (d.is_related(j) ? "R " : "  ");
  out << "  (R = related column)\n\n";

  out << "u = (";
  for (size_t i = 0; i < d.u.size(); ++i) out << (i ? "," : "") << d.u[i];
  out << ")   v = (";
  for (size_t i = 0; i < d.v.size(); ++i) out << (i ? "," : "") << d.v[i];
  out << ")\n";
  out << "w = " << w << "\n";

  std::vector<int> bottom_rows, top_rows;
  for (int i = r; i >= 1; --i) bottom_rows.push_back(p.lambda[i - 1]);
  for (int i = k; i >= 1; --i) top_rows.push_back(p.alpha_part(i));
  ReducedWord bottom_word(word.begin(), word.begin() + p.lambda_weight());
  ReducedWord top_word(word.begin() + p.lambda_weight(), word.end());
  out << "w_lambda = " << word_groups(bottom_word, bottom_rows) << "\n";
  out << "w_alpha  = " << word_groups(top_word, top_rows) << "\n\n";

  // Per-box roots, aligned per block.
  size_t width = 1;
  for (const BoxRoot& b : roots) width = std::max(width, b.root.to_string().size());
  std::map<std::pair<int, int>, std::string> top_r, bot_r;
  for (const BoxRoot& b : roots)
    (b.top ? top_r : bot_r)[{b.i, b.j}] = b.root.to_string();
  out << "roots (top):\n";
  for (int i = 1; i <= k; ++i) {
    out << "  ";
    for (int j = 1; j <= p.alpha_part(i); ++j) {
      std::string s = top_r[{i, j}];
      s.resize(width, ' ');
      out << s << ' ';
    }
    out << "\n";
  }
  out << "roots (bottom):\n";
  for (int i = 1; i <= r; ++i) {
    out << "  ";
    for (int j = 1; j < d.bottom_start(i); ++j) out << std::string(width + 1, ' ');
    for (int j = d.bottom_start(i); j <= d.bottom_end(i); ++j) {
      std::string s = bot_r[{i, j}];
      s.resize(width, ' ');
      out << s << ' ';
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace halfshift
