#pragma once

// Umbrella header for the splicing-edge detection library.

#include "splicedge/benchmark.hpp"
#include "splicedge/classify.hpp"
#include "splicedge/colorspace.hpp"
#include "splicedge/edges.hpp"
#include "splicedge/eval.hpp"
#include "splicedge/morphology.hpp"
#include "splicedge/plane.hpp"
#include "splicedge/scene_text.hpp"
#include "splicedge/simulate.hpp"
