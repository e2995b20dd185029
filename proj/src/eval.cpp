#include <functional>
#include <map>
#include <tuple>

#include "tsat/errors.hpp"
#include "tsat/lasso.hpp"

namespace tsat {

namespace {

// Truth labeling of one subformula over the lasso's infinite word.  Values
// are stored explicitly for positions [0, stable + loop_len) and repeat with
// the loop period from position `stable` onward.  Future operators are
// periodic as soon as their operands are (solved by a fixpoint on the loop);
// past operators need one extra loop round per nesting level to settle, so
// `stable` grows by the period at every Since node.
struct Label {
  size_t stable = 0;
  size_t period = 1;
  std::vector<char> vals;  // size stable + period

  bool at(size_t j) const {
    if (j < stable) return vals[j];
    return vals[stable + (j - stable) % period];
  }
};

class Labeler {
 public:
  explicit Labeler(const Lasso& s) : s_(s), p_(s.prefix.size()), l_(s.loop.size()) {
    if (l_ == 0) throw ArgumentError("eval: lasso loop must be nonempty");
  }

  const Label& label(const Formula& f) {
    const std::string key = print_formula(f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Label lab = compute(f);
    return memo_.emplace(std::move(key), std::move(lab)).first->second;
  }

 private:
  Label compute(const Formula& f) {
    switch (f.op) {
      case Op::Var: {
        Label out;
        out.stable = p_;
        out.period = l_;
        out.vals.resize(p_ + l_);
        for (size_t j = 0; j < p_ + l_; ++j) out.vals[j] = s_.at(j).count(f.var) ? 1 : 0;
        return out;
      }
      case Op::Apply: {
        std::vector<const Label*> kids;
        kids.reserve(f.kids.size());
        size_t stable = 0;
        for (const auto& k : f.kids) {
          kids.push_back(&label(*k));
          stable = std::max(stable, kids.back()->stable);
        }
        Label out;
        out.stable = stable;
        out.period = l_;
        out.vals.resize(stable + l_);
        std::vector<bool> args(f.kids.size());
        for (size_t j = 0; j < out.vals.size(); ++j) {
          for (size_t i = 0; i < kids.size(); ++i) args[i] = kids[i]->at(j);
          out.vals[j] = f.fn->eval(args) ? 1 : 0;
        }
        return out;
      }
      case Op::Next: {
        const Label& c = label(*f.kids[0]);
        Label out;
        out.stable = c.stable;
        out.period = l_;
        out.vals.resize(out.stable + l_);
        for (size_t j = 0; j < out.vals.size(); ++j) out.vals[j] = c.at(j + 1);
        return out;
      }
      case Op::Eventually:
        return until_label(nullptr, &label(*f.kids[0]), /*negate=*/false);
      case Op::Globally: {
        // G a = no future position refutes a.
        const Label nb = negated(label(*f.kids[0]));
        return until_label(nullptr, &nb, /*negate=*/true);
      }
      case Op::Until:
        return until_label(&label(*f.kids[0]), &label(*f.kids[1]), /*negate=*/false);
      case Op::Since: {
        const Label& a = label(*f.kids[0]);
        const Label& b = label(*f.kids[1]);
        Label out;
        out.stable = std::max(a.stable, b.stable) + l_;
        out.period = l_;
        out.vals.resize(out.stable + l_);
        char prev = 0;
        for (size_t j = 0; j < out.vals.size(); ++j) {
          const char v = b.at(j) || (a.at(j) && prev) ? 1 : 0;
          out.vals[j] = v;
          prev = v;
        }
        return out;
      }
    }
    throw InvariantError("eval: unreachable operator");
  }

  static Label negated(const Label& l) {
    Label out = l;
    for (auto& v : out.vals) v = !v;
    return out;
  }

  // Least-fixpoint solution of  u(j) = b(j) or (a(j) and u(j+1))  over the
  // periodic tail, then a backward pass down to position 0.  A null `a`
  // stands for the constant true (the F case).  With `negate` the complement
  // is returned, which turns the least fixpoint for "eventually not" into G.
  Label until_label(const Label* a, const Label* b, bool negate) {
    size_t stable = b->stable;
    if (a) stable = std::max(stable, a->stable);
    Label out;
    out.stable = stable;
    out.period = l_;
    out.vals.assign(stable + l_, 0);

    // Solve on the loop slots [stable, stable + l).
    for (size_t j = stable; j < stable + l_; ++j) out.vals[j] = b->at(j);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t step = 0; step < l_; ++step) {
        const size_t j = stable + l_ - 1 - step;
        const size_t next = j + 1 == stable + l_ ? stable : j + 1;
        const char v =
            b->at(j) || ((a == nullptr || a->at(j)) && out.vals[next]) ? 1 : 0;
        if (v != out.vals[j]) {
          out.vals[j] = v;
          changed = true;
        }
      }
    }
    // Backward over the prefix of the label.
    for (size_t step = 0; step < stable; ++step) {
      const size_t j = stable - 1 - step;
      out.vals[j] = b->at(j) || ((a == nullptr || a->at(j)) && out.vals[j + 1]) ? 1 : 0;
    }
    if (negate)
      for (auto& v : out.vals) v = !v;
    return out;
  }

  const Lasso& s_;
  size_t p_, l_;
  std::map<std::string, Label> memo_;
};

}  // namespace

bool eval_at(const Lasso& s, size_t i, const Formula& phi) {
  Labeler labeler(s);
  return labeler.label(phi).at(i);
}

bool eval_prop(const Formula& phi, const Assignment& assignment) {
  switch (phi.op) {
    case Op::Var:
      return assignment.count(phi.var) != 0;
    case Op::Apply: {
      std::vector<bool> args(phi.kids.size());
      for (size_t i = 0; i < args.size(); ++i) args[i] = eval_prop(*phi.kids[i], assignment);
      return phi.fn->eval(args);
    }
    default:
      throw FragmentError("eval_prop: formula contains a temporal operator");
  }
}

std::optional<Witness> sat_bounded(const Formula& phi, int max_prefix, int max_loop,
                                   const BoundedSearchOptions& opts) {
  if (max_prefix < 0 || max_loop < 1)
    throw ArgumentError("sat_bounded: need max_prefix >= 0 and max_loop >= 1");
  const std::set<std::string> var_set = variables(phi);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  const size_t nvars = vars.size();
  const uint64_t phi_size = node_count(phi);

  uint64_t work = 0;
  for (int total = 1; total <= max_prefix + max_loop; ++total) {
    for (int l = 1; l <= std::min(total, max_loop); ++l) {
      const int p = total - l;
      if (p > max_prefix) continue;
      const size_t bits = nvars * static_cast<size_t>(total);
      if (bits > 62) throw ResourceError("sat_bounded: assignment space too large");
      const uint64_t count = uint64_t{1} << bits;
      for (uint64_t id = 0; id < count; ++id) {
        work += phi_size;
        if (work > opts.work_limit)
          throw ResourceError("sat_bounded: work limit exceeded");
        Lasso s;
        s.prefix.resize(p);
        s.loop.resize(l);
        for (int j = 0; j < total; ++j) {
          Assignment& a = j < p ? s.prefix[j] : s.loop[j - p];
          for (size_t v = 0; v < nvars; ++v) {
            const size_t bit = static_cast<size_t>(j) * nvars + v;
            if ((id >> (bits - 1 - bit)) & 1u) a.insert(vars[v]);
          }
        }
        Labeler labeler(s);
        const Label& top = labeler.label(phi);
        for (int i = 0; i < total; ++i)
          if (top.at(i)) return Witness{std::move(s), static_cast<size_t>(i)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace tsat
