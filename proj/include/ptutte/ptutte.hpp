#pragma once

#include "ptutte/bip_graph.hpp"
#include "ptutte/bipoly.hpp"
#include "ptutte/canonical.hpp"
#include "ptutte/classic_tutte.hpp"
#include "ptutte/enumerate.hpp"
#include "ptutte/error.hpp"
#include "ptutte/graph_io.hpp"
#include "ptutte/memo.hpp"
#include "ptutte/multigraph.hpp"
#include "ptutte/perm_tutte.hpp"
#include "ptutte/rational.hpp"
#include "ptutte/tree_survey.hpp"
#include "ptutte/verify.hpp"
