// Umbrella header.
#pragma once

#include "oasm/automaton.hpp"
#include "oasm/determinize.hpp"
#include "oasm/errors.hpp"
#include "oasm/experiments.hpp"
#include "oasm/io.hpp"
#include "oasm/minimize.hpp"
#include "oasm/nfa.hpp"
#include "oasm/oracle.hpp"
#include "oasm/overlap.hpp"
#include "oasm/witnesses.hpp"
