#pragma once

#include "canonical.hpp"
#include "certificates.hpp"
#include "classes.hpp"
#include "counting.hpp"
#include "decomposition.hpp"
#include "driver.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "leaf_lemmas.hpp"
#include "outcome.hpp"
#include "random.hpp"
#include "report.hpp"
#include "rational.hpp"
#include "restricted.hpp"
#include "text_format.hpp"
#include "tournaments.hpp"
#include "transfer.hpp"
#include "vertex_set.hpp"
