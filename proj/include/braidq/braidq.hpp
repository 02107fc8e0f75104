#pragma once

// Umbrella header: braid words, rewrite moves, the tangle/untangle
// environments, tabular Q-learning, two-player self-play, ground-truth
// oracles, and SVG diagrams.

#include "braidq/braid.hpp"
#include "braidq/env.hpp"
#include "braidq/io.hpp"
#include "braidq/moves.hpp"
#include "braidq/oracle.hpp"
#include "braidq/qlearn.hpp"
#include "braidq/render.hpp"
#include "braidq/rng.hpp"
#include "braidq/rules.hpp"
#include "braidq/selfplay.hpp"
