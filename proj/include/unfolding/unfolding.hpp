// Umbrella header.
#pragma once

#include "unfolding/automata.hpp"
#include "unfolding/counterpoint.hpp"
#include "unfolding/epsilon0.hpp"
#include "unfolding/flexible.hpp"
#include "unfolding/game.hpp"
#include "unfolding/io.hpp"
#include "unfolding/melody_builder.hpp"
#include "unfolding/ne_solve.hpp"
#include "unfolding/rational.hpp"
#include "unfolding/schedules.hpp"
#include "unfolding/sequence.hpp"
