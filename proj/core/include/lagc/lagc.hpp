#pragma once

#include "lagc/action.hpp"
#include "lagc/calculus.hpp"
#include "lagc/complex.hpp"
#include "lagc/corpus.hpp"
#include "lagc/derham.hpp"
#include "lagc/error.hpp"
#include "lagc/expression.hpp"
#include "lagc/lagrangian.hpp"
#include "lagc/parse.hpp"
#include "lagc/signature.hpp"
#include "lagc/symbol.hpp"
