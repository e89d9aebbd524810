#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "types.hpp"
#include "tropical.hpp"
#include "constraint_system.hpp"
#include "cell_complex.hpp"
#include "dual_subdivision.hpp"
#include "monomial.hpp"
#include "type_ideals.hpp"
#include "linalg.hpp"
#include "resolution.hpp"
#include "cayley.hpp"
#include "document.hpp"
#include "pipeline.hpp"
#include "svg.hpp"
