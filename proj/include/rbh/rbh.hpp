#pragma once

#include "rbh/bfam.hpp"
#include "rbh/bgf.hpp"
#include "rbh/bigraph.hpp"
#include "rbh/enumerate.hpp"
#include "rbh/error.hpp"
#include "rbh/isomorphism.hpp"
#include "rbh/parallel.hpp"
#include "rbh/rainbow.hpp"
#include "rbh/report.hpp"
#include "rbh/sampling.hpp"
#include "rbh/shifting.hpp"
#include "rbh/spectral.hpp"
#include "rbh/threshold_suite.hpp"
#include "rbh/verify.hpp"
