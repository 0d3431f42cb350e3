#pragma once

#include "analysis.hpp"
#include "automaton.hpp"
#include "bounds.hpp"
#include "dfa.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "run.hpp"
#include "text_format.hpp"
#include "transform.hpp"
#include "witness.hpp"
