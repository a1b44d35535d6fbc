#pragma once

#include "grossone/error.hpp"
#include "grossone/rational.hpp"
#include "grossone/gross_number.hpp"
#include "grossone/set_algebra.hpp"
#include "grossone/series.hpp"
#include "grossone/paradoxes.hpp"
#include "grossone/render.hpp"
#include "grossone/lexer.hpp"
#include "grossone/parser.hpp"
#include "grossone/evaluator.hpp"
