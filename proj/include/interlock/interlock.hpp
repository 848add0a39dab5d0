#pragma once

#include "interlock/affiliation.hpp"
#include "interlock/affiliation_csv.hpp"
#include "interlock/centrality.hpp"
#include "interlock/cohesion.hpp"
#include "interlock/components.hpp"
#include "interlock/concordance.hpp"
#include "interlock/distribution.hpp"
#include "interlock/error.hpp"
#include "interlock/fixtures.hpp"
#include "interlock/graph.hpp"
#include "interlock/label.hpp"
#include "interlock/pajek.hpp"
#include "interlock/partition.hpp"
#include "interlock/pipeline.hpp"
#include "interlock/projection.hpp"
#include "interlock/random.hpp"
#include "interlock/ranking.hpp"
#include "interlock/report.hpp"
#include "interlock/text.hpp"
#include "interlock/validate.hpp"
