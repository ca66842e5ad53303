#pragma once

// Umbrella header: exact intersection theory, Chern-class arithmetic and
// the case-enumeration verifiers for low-degree solids with scroll
// structures.

#include "bundles.hpp"
#include "classify.hpp"
#include "cli.hpp"
#include "errors.hpp"
#include "intersection.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "scroll.hpp"
#include "tripleplane.hpp"
