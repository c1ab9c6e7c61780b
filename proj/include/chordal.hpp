/**
 * Umbrella header for the chordal b-vector library.
 */

#ifndef CHORDAL_HPP
#define CHORDAL_HPP

#include "chordal/betti.hpp"
#include "chordal/cliques.hpp"
#include "chordal/complex.hpp"
#include "chordal/core.hpp"
#include "chordal/generators.hpp"
#include "chordal/graph.hpp"
#include "chordal/graph_io.hpp"
#include "chordal/peo.hpp"
#include "chordal/shifting.hpp"
#include "chordal/threshold.hpp"
#include "chordal/vectors.hpp"
#include "chordal/verify.hpp"

#endif
