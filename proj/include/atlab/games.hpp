#pragma once

#include <optional>
#include <vector>

#include "atlab/graph.hpp"

namespace atlab {

// Color sets are bitmasks; the palette never exceeds 64 colors.
using ColorSet = std::uint64_t;
using ListAssignment = std::vector<ColorSet>;

// Proper coloring from the lists, or absent.
std::optional<std::vector<int>> is_l_colorable(const Graph& g, const ListAssignment& lists);

// True iff every assignment of f(v)-sized lists admits a proper coloring.
// A counterexample assignment needs at most sum f distinct colors, so the
// palette [0, sum f) is exhaustive; assignments are enumerated up to color
// renaming.  Guarded by the palette cap.
bool is_f_choosable(const Graph& g, const DegreeFunc& f, int palette_cap = 12);

// Exact value of the online list game by its recursive definition: Painter
// wins (G, f) iff f >= 1 everywhere and for every nonempty S there is an
// independent I inside S with (G - I, f - 1_S) again a win.
bool is_online_f_choosable(const Graph& g, const DegreeFunc& f, int order_cap = 8);

// Decides both halves of the cut composition: G - H with f, and G[H] with
// f_H(v) = f(v) + d_H(v) - d_G(v).  True means both sides are online
// choosable, which lifts to G.
bool compose_online_cut(const Graph& g, VSet h, const DegreeFunc& f, int order_cap = 8);

}  // namespace atlab
