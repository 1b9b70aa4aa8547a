#include "latstick/lattice_build.hpp"

#include <algorithm>
#include <functional>

namespace latstick {

std::string_view merge_kind_name(MergeKind kind) {
  switch (kind) {
    case MergeKind::DropDown: return "drop-down";
    case MergeKind::Translate: return "translate";
    case MergeKind::Extend: return "extend";
    case MergeKind::Jog: return "jog";
  }
  return "?";
}

int MergePlan::merge_count() const {
  int n = 0;
  for (const auto& v : vertices) n += static_cast<int>(v.steps.size());
  return n;
}

namespace {

const std::array<Direction, 4> kHorizontal{{{Axis::X, 1}, {Axis::X, -1}, {Axis::Y, 1}, {Axis::Y, -1}}};

std::optional<int> horizontal_at(const StickComplex& c, const Point3& p) {
  for (int i : c.incident(p)) {
    if (c.sticks[i].axis() != Axis::Z) return i;
  }
  return std::nullopt;
}

Direction perpendicular(const Direction& u, int sign) {
  return {u.axis == Axis::X ? Axis::Y : Axis::X, sign};
}

MergeKind kind_for(const Direction& pivot_dir, const Direction& stick_dir) {
  if (pivot_dir == stick_dir) return MergeKind::DropDown;
  if (pivot_dir == stick_dir.opposite()) return MergeKind::Extend;
  return MergeKind::Translate;
}

int top_of(const std::vector<bool>& merged) {
  for (int i = static_cast<int>(merged.size()) - 1; i >= 0; --i) {
    if (!merged[i]) return i;
  }
  return -1;
}

// Returns an empty string on success, otherwise why the step does not apply.
std::string apply_step(StickComplex& c, const VertexLine& line, std::vector<bool>& merged, const MergeStep& step) {
  const int k = step.target;
  if (k < 2 || k >= line.degree() || merged[k]) return "invalid target";
  const Point3 zk = line.at(k);
  const Point3 pivot = line.at(1);
  const auto idx = horizontal_at(c, zk);
  if (!idx) return "no horizontal stick at target";
  const Stick ek = c.sticks[*idx];
  const Direction u = ek.direction_from(zk);
  const Direction w = step.direction;
  const bool jog = step.kind == MergeKind::Jog;
  if (w.axis == Axis::Z || (jog ? kind_for(w, u) != MergeKind::Translate : kind_for(w, u) != step.kind)) {
    return "direction does not match merge kind";
  }

  const bool is_top = top_of(merged) == k;
  if (step.kind == MergeKind::Extend && !is_top) return "extension would cross the column";
  if (step.kind == MergeKind::DropDown && step.offset > ek.length()) return "offset longer than stick";

  const Point3 shift = w.vec() * step.offset;
  const Point3 near = zk + shift;
  const Point3 far = ek.other_end(zk);

  std::vector<int> remove{*idx};
  std::vector<Stick> add;
  if (step.kind == MergeKind::Translate) {
    std::vector<int> nbrs;
    for (int i : c.incident(far)) {
      if (i != *idx) nbrs.push_back(i);
    }
    if (nbrs.size() != 1) return "far end is a junction";
    const Stick& f = c.sticks[nbrs.front()];
    if (f.axis() != w.axis) return "far neighbour not parallel to the translation";
    const Point3 moved = far + shift;
    const Point3& f_other = f.other_end(far);
    if (moved == f_other) return "far neighbour would vanish";
    if ((f_other[w.axis] - far[w.axis]) * w.sign < 0 && f.length() <= step.offset) return "far neighbour too short";
    remove.push_back(nbrs.front());
    add.emplace_back(moved, f_other, f.kind(), f.owner());
    add.emplace_back(near, moved, ek.kind(), ek.owner());
  } else if (jog) {
    const Point3 moved = far + shift;
    add.emplace_back(near, moved, ek.kind(), ek.owner());
    add.emplace_back(moved, far, ek.kind(), ek.owner());
  } else if (near == far) {
    // The whole stick drops; only a short one (a jog left by the vertex at
    // its other end) may do so, and its far end must stay a plain bend.
    if (step.kind != MergeKind::DropDown) return "stick would vanish";
    if (c.incident(far).size() != 2) return "absorbed stick ends at a junction";
  } else {
    add.emplace_back(near, far, ek.kind(), ek.owner());
  }

  merged[k] = true;
  if (is_top) {
    const Rational new_top = line.levels[top_of(merged)];
    const Rational& old_top = line.levels[k];
    for (int i = 0; i < static_cast<int>(c.sticks.size()); ++i) {
      const auto& st = c.sticks[i];
      if (st.axis() != Axis::Z || st.a().x() != line.axis[0] || st.a().y() != line.axis[1]) continue;
      if (st.b().z() <= new_top || st.a().z() >= old_top) continue;
      remove.push_back(i);
      if (st.a().z() < new_top) {
        add.emplace_back(st.a(), Point3(st.a().x(), st.a().y(), new_top), st.kind(), st.owner());
      }
    }
  }
  const Point3 low(near.x(), near.y(), pivot.z());
  add.emplace_back(pivot, low, StickKind::Merge, ek.owner());
  add.emplace_back(low, near, StickKind::Merge, ek.owner());

  std::sort(remove.begin(), remove.end());
  remove.erase(std::unique(remove.begin(), remove.end()), remove.end());
  for (auto it = remove.rbegin(); it != remove.rend(); ++it) c.sticks.erase(c.sticks.begin() + *it);
  c.sticks.insert(c.sticks.end(), add.begin(), add.end());
  return {};
}

struct Candidate {
  int target;
  Direction direction;
  MergeKind kind;
  std::optional<Rational> offset{};  // overrides the step's default offset
};

}  // namespace

MergePlan plan_merges(const StickComplex& complex, const std::map<std::string, VertexLine>& lines) {
  MergePlan plan;
  StickComplex work = complex;
  for (const auto& [label, line] : lines) {
    const int d = line.degree();
    if (d < 4) continue;
    if (d > 6) throw Error(ErrorCode::NoFreeDirection, "vertex '" + label + "' has degree above 6");
    const int merges = d - 3;
    const Rational unit = line.unit / 2;

    VertexMergePlan vplan{label, line.at(1), {}};
    const auto e2 = horizontal_at(work, line.at(1));
    if (!e2) throw Error(ErrorCode::MergeCollision, "pivot of '" + label + "' has no horizontal stick");
    const Direction e2_dir = work.sticks[*e2].direction_from(line.at(1));

    bool any_candidate = false;
    std::string last_failure;
    std::function<bool(const StickComplex&, std::vector<bool>, std::vector<Direction>, int)> search =
        [&](const StickComplex& state, std::vector<bool> merged, std::vector<Direction> used, int step) -> bool {
      if (step == merges) {
        work = state;
        return true;
      }
      const Rational offset = unit * (step + 1) / (merges + 1);
      std::vector<Candidate> candidates;
      auto stick_dir = [&](int k) -> std::optional<Direction> {
        const auto idx = horizontal_at(state, line.at(k));
        if (!idx) return std::nullopt;
        return state.sticks[*idx].direction_from(line.at(k));
      };
      auto free = [&](const Direction& dir) { return std::find(used.begin(), used.end(), dir) == used.end(); };
      if (d == 6 && step == 2) {
        // One horizontal direction is left; merge the fifth junction along it
        // unless its stick points the opposite way, then use the top one.
        Direction v{};
        for (const auto& h : kHorizontal) {
          if (free(h)) v = h;
        }
        const auto u5 = stick_dir(4);
        if (u5 && *u5 != v.opposite()) candidates.push_back({4, v, kind_for(v, *u5)});
        const auto u6 = stick_dir(5);
        if (u6) candidates.push_back({5, v, kind_for(v, *u6)});
        for (const auto& [k, u] : {std::pair{4, u5}, std::pair{5, u6}}) {
          if (u && kind_for(v, *u) == MergeKind::Translate) candidates.push_back({k, v, MergeKind::Jog});
        }
      } else {
        const int k = step + 2;
        const auto u = stick_dir(k);
        if (u && free(*u)) {
          const auto& ek = state.sticks[*horizontal_at(state, line.at(k))];
          if (ek.length() < unit) candidates.push_back({k, *u, MergeKind::DropDown, ek.length()});
        }
        if (u) {
          for (const auto& dir : {*u, perpendicular(*u, 1), perpendicular(*u, -1), u->opposite()}) {
            if (free(dir)) candidates.push_back({k, dir, kind_for(dir, *u)});
          }
          for (int sign : {1, -1}) {
            const auto dir = perpendicular(*u, sign);
            if (free(dir)) candidates.push_back({k, dir, MergeKind::Jog});
          }
        }
      }
      for (const auto& cand : candidates) {
        any_candidate = true;
        StickComplex trial = state;
        auto trial_merged = merged;
        const MergeStep s{cand.target, cand.direction, cand.kind, cand.offset.value_or(offset)};
        const auto why = apply_step(trial, line, trial_merged, s);
        if (!why.empty()) {
          last_failure = why;
          continue;
        }
        if (!check_self_avoiding(trial).empty()) {
          last_failure = "collision";
          continue;
        }
        vplan.steps.push_back(s);
        auto next_used = used;
        next_used.push_back(cand.direction);
        if (search(trial, trial_merged, next_used, step + 1)) return true;
        vplan.steps.pop_back();
      }
      return false;
    };
    if (!search(work, std::vector<bool>(d, false), {e2_dir}, 0)) {
      if (!any_candidate) {
        throw Error(ErrorCode::NoFreeDirection, "no free horizontal direction at vertex '" + label + "'");
      }
      throw Error(ErrorCode::MergeCollision,
                  "every merge option at vertex '" + label + "' fails (last: " + last_failure + ")");
    }
    plan.vertices.push_back(std::move(vplan));
  }
  return plan;
}

StickComplex apply_merges(StickComplex complex, const MergePlan& plan,
                          const std::map<std::string, VertexLine>& lines) {
  for (const auto& vplan : plan.vertices) {
    const auto& line = lines.at(vplan.vertex);
    std::vector<bool> merged(line.degree(), false);
    for (const auto& step : vplan.steps) {
      const auto why = apply_step(complex, line, merged, step);
      if (!why.empty()) {
        throw Error(ErrorCode::MergeCollision, "vertex '" + vplan.vertex + "': " + why);
      }
    }
  }
  if (!check_self_avoiding(complex).empty()) {
    throw Error(ErrorCode::MergeCollision, "merged complex is not self-avoiding");
  }
  return complex;
}

}  // namespace latstick
