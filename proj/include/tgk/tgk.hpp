#pragma once

#include "tgk/approx.hpp"
#include "tgk/dissemination.hpp"
#include "tgk/error.hpp"
#include "tgk/exact_count.hpp"
#include "tgk/feature_vector.hpp"
#include "tgk/graphlets.hpp"
#include "tgk/io.hpp"
#include "tgk/kernel.hpp"
#include "tgk/parallel.hpp"
#include "tgk/pipeline.hpp"
#include "tgk/random.hpp"
#include "tgk/sequence_dp.hpp"
#include "tgk/tgraph.hpp"
