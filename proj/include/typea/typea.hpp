#pragma once

#include "typea/bruhat.hpp"
#include "typea/coset.hpp"
#include "typea/costas.hpp"
#include "typea/error.hpp"
#include "typea/permutation.hpp"
#include "typea/report.hpp"
#include "typea/roots.hpp"
