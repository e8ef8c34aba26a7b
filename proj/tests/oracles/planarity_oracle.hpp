#pragma once

#include "zsurg/diagram.hpp"

namespace oracle {

/// A DT code is realizable iff its 4-valent graph embeds with the two
/// strands transverse at every crossing. Each crossing becomes a wheel
/// whose rim lists the ends in the order in, other, out, other; a wheel is
/// 3-connected, so every planar embedding keeps that rim order.
bool dt_realizable_by_planarity(const zsurg::DtCode& code);

}  // namespace oracle
