#pragma once

#include "svh/errors.hpp"
#include "svh/rational.hpp"
#include "svh/sparse_matrix.hpp"
#include "svh/echelon.hpp"
#include "svh/basis.hpp"
#include "svh/coeff_poly.hpp"
#include "svh/algebra.hpp"
#include "svh/dsl.hpp"
#include "svh/bilinear_form.hpp"
#include "svh/cocycle.hpp"
#include "svh/normalize.hpp"
#include "svh/presets.hpp"
#include "svh/lemmas.hpp"
#include "svh/analysis.hpp"
#include "svh/report.hpp"
#include "svh/cli.hpp"
