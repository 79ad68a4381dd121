#pragma once

// Generalized class number series, half-integral-weight Kloosterman zeta
// functions, quadratic form traces, and the verification suites tying them
// together.  Header-only; include this to get the full library.

#include "hclass/rational.hpp"
#include "hclass/arith.hpp"
#include "hclass/bernoulli.hpp"
#include "hclass/lnumeric.hpp"
#include "hclass/parallel.hpp"
#include "hclass/kloosterman.hpp"
#include "hclass/series.hpp"
#include "hclass/qform.hpp"
#include "hclass/eisnumeric.hpp"
#include "hclass/verify.hpp"
