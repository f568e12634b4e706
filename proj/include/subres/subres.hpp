#pragma once

// Umbrella header.

#include "subres/bernstein.hpp"
#include "subres/closed_form.hpp"
#include "subres/combinatorics.hpp"
#include "subres/domains.hpp"
#include "subres/matrix.hpp"
#include "subres/numbers.hpp"
#include "subres/polynomial.hpp"
#include "subres/report.hpp"
#include "subres/subresultant.hpp"
