#pragma once

#include "icg/bitset.hpp"
#include "icg/clique_theory.hpp"
#include "icg/gcd_graph.hpp"
#include "icg/max_clique.hpp"
#include "icg/numtheory.hpp"
#include "icg/omega.hpp"
#include "icg/scan.hpp"
#include "icg/union_find.hpp"
#include "icg/witnesses.hpp"
