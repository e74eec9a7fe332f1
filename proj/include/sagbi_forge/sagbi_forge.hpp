#pragma once

#include "sagbi_forge/edge_rings.hpp"
#include "sagbi_forge/errors.hpp"
#include "sagbi_forge/exponent_vector.hpp"
#include "sagbi_forge/field.hpp"
#include "sagbi_forge/groebner.hpp"
#include "sagbi_forge/json_io.hpp"
#include "sagbi_forge/monomial_order.hpp"
#include "sagbi_forge/polynomial.hpp"
#include "sagbi_forge/posets.hpp"
#include "sagbi_forge/sagbi.hpp"
#include "sagbi_forge/text_format.hpp"
#include "sagbi_forge/toric.hpp"
#include "sagbi_forge/variable_table.hpp"
