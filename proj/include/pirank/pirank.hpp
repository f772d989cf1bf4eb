#pragma once

#include "pirank/af.hpp"
#include "pirank/generate.hpp"
#include "pirank/power_index.hpp"
#include "pirank/properties.hpp"
#include "pirank/ranking.hpp"
#include "pirank/semantics.hpp"
#include "pirank/service.hpp"
