#pragma once

#include "bounds.hpp"
#include "construction.hpp"
#include "factorize.hpp"
#include "generator_file.hpp"
#include "generator_set.hpp"
#include "group.hpp"
#include "records.hpp"
#include "search.hpp"
#include "table.hpp"
#include "verification.hpp"
