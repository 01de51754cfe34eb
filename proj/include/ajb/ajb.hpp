#pragma once

// Umbrella header: the tied-link bracket library.
//
// The double bracket of a tied link diagram (a link diagram whose
// components are partitioned by colors) extends the Kauffman bracket and
// takes values in Z[A^{+-1}, c]. This library computes it three ways --
// resolution trees under pluggable crossing orders, and closed-form state
// sums for 2- and 3-colored diagrams -- and cross-checks the routes
// against each other together with the leaf- and state-counting formulas.

#include "ajb/laurent.hpp"      // exact arithmetic in Z[A^{+-1}, c]
#include "ajb/diagram.hpp"      // tied diagrams, censuses, smoothings
#include "ajb/text_format.hpp"  // line-oriented diagram files
#include "ajb/kauffman.hpp"     // classical bracket state sum
#include "ajb/tree.hpp"         // resolution-tree engine (the oracle)
#include "ajb/closed.hpp"       // closed-form state sums and counts
#include "ajb/verify.hpp"       // randomized cross-validation harness
