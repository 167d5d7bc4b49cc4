#pragma once

// Engine headers. server.hpp (cpp-httplib binding) is not included here;
// include it directly where needed.
#include "weblens/config.hpp"
#include "weblens/domain.hpp"
#include "weblens/error.hpp"
#include "weblens/layout.hpp"
#include "weblens/neighborhood.hpp"
#include "weblens/scene.hpp"
#include "weblens/store.hpp"
#include "weblens/summary.hpp"
#include "weblens/twitter.hpp"
