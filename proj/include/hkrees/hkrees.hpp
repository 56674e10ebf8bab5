#pragma once

#include "hkrees/binomial_groebner.hpp"
#include "hkrees/combinatorics.hpp"
#include "hkrees/errors.hpp"
#include "hkrees/exact.hpp"
#include "hkrees/fitting.hpp"
#include "hkrees/hilbert_samuel.hpp"
#include "hkrees/hk_formulas.hpp"
#include "hkrees/linear_solve.hpp"
#include "hkrees/monomial.hpp"
#include "hkrees/polynomial.hpp"
#include "hkrees/quasi_polynomial.hpp"
#include "hkrees/rees_oracle.hpp"
