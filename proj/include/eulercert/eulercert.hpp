#pragma once

// Umbrella header: exact Eulerian polynomials of Coxeter types A/B/D, the
// derivative polynomials of tanh and sech, and Sturm-based certification of
// real-rootedness, interleaving and compatibility claims about them.

#include "eulercert/certify.hpp"
#include "eulercert/checks.hpp"
#include "eulercert/coxeter.hpp"
#include "eulercert/derivpoly.hpp"
#include "eulercert/errors.hpp"
#include "eulercert/eulerian.hpp"
#include "eulercert/intpoly.hpp"
#include "eulercert/json_io.hpp"
#include "eulercert/mobius.hpp"
#include "eulercert/poly.hpp"
#include "eulercert/prng.hpp"
#include "eulercert/rational.hpp"
#include "eulercert/report.hpp"
#include "eulercert/roots.hpp"
#include "eulercert/series.hpp"
#include "eulercert/squarefree.hpp"
#include "eulercert/sturm.hpp"
#include "eulercert/suites.hpp"
