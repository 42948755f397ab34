#pragma once

// Umbrella header: exact sieve-side quantities, the analytic constants
// and li_f machinery, asymptotic predictors, the Dickman/De Bruijn route,
// and the verification-row schema.

#include "medlpf/asymptotics.hpp"
#include "medlpf/base.hpp"
#include "medlpf/compensated.hpp"
#include "medlpf/constants.hpp"
#include "medlpf/dickman.hpp"
#include "medlpf/lif.hpp"
#include "medlpf/lpf_histogram.hpp"
#include "medlpf/median.hpp"
#include "medlpf/omega.hpp"
#include "medlpf/prime_sums.hpp"
#include "medlpf/quadrature.hpp"
#include "medlpf/sieve.hpp"
#include "medlpf/stieltjes.hpp"
#include "medlpf/verify.hpp"
