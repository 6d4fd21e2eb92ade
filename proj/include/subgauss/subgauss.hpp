// subgauss.hpp
#pragma once

#include "subgauss/errors.hpp"
#include "subgauss/indicator.hpp"
#include "subgauss/moments.hpp"
#include "subgauss/norm.hpp"
#include "subgauss/numeric_norm.hpp"
#include "subgauss/oracles/distribution.hpp"
#include "subgauss/oracles/enumeration.hpp"
#include "subgauss/oracles/golden_section.hpp"
#include "subgauss/oracles/monte_carlo.hpp"
#include "subgauss/oracles/sum_mgf.hpp"
#include "subgauss/probability.hpp"
#include "subgauss/report.hpp"
#include "subgauss/sum_bounds.hpp"
#include "subgauss/sum_spec.hpp"
#include "subgauss/verify.hpp"
