#pragma once

#include "lcseq/io.hpp"
#include "lcseq/rational.hpp"
#include "lcseq/relations.hpp"
#include "lcseq/search.hpp"
#include "lcseq/sequence.hpp"
#include "lcseq/theorems.hpp"
