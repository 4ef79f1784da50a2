#pragma once
// Deterministic ASCII rendering: arcs drawn as brackets over a baseline of
// point labels, ties drawn as marked rows below it.

#include <string>

#include "tiedarcs/arc_diagram.hpp"
#include "tiedarcs/ta_diagram.hpp"
#include "tiedarcs/tb_codec.hpp"

namespace tiedarcs {

std::string render_ascii(const ArcDiagram& d);
std::string render_ascii(const TbDiagram& d);
std::string render_ascii(const TaDiagram& d);

}  // namespace tiedarcs
