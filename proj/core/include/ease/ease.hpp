#pragma once

// Convenience umbrella header.

#include "ease/baselines.hpp"
#include "ease/dense_matrix.hpp"
#include "ease/diagnostics.hpp"
#include "ease/error.hpp"
#include "ease/evaluate.hpp"
#include "ease/gram.hpp"
#include "ease/ingest.hpp"
#include "ease/interaction_matrix.hpp"
#include "ease/metrics.hpp"
#include "ease/model_io.hpp"
#include "ease/ranking.hpp"
#include "ease/report.hpp"
#include "ease/scorer.hpp"
#include "ease/solver.hpp"
#include "ease/split.hpp"
#include "ease/synthetic.hpp"
#include "ease/types.hpp"
#include "ease/version.hpp"
#include "ease/vocabulary.hpp"
