#pragma once

#include "nearpoint/commands.hpp"
#include "nearpoint/diff_op.hpp"
#include "nearpoint/errors.hpp"
#include "nearpoint/forms.hpp"
#include "nearpoint/jacobi.hpp"
#include "nearpoint/matrix.hpp"
#include "nearpoint/monomial.hpp"
#include "nearpoint/polynomial.hpp"
#include "nearpoint/problem.hpp"
#include "nearpoint/random.hpp"
#include "nearpoint/rational.hpp"
#include "nearpoint/report.hpp"
#include "nearpoint/smooth_fn.hpp"
#include "nearpoint/suites.hpp"
#include "nearpoint/weil_algebra.hpp"
