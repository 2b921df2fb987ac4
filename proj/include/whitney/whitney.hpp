#pragma once

#include "whitney/bigint.hpp"
#include "whitney/cobweb.hpp"
#include "whitney/dot.hpp"
#include "whitney/errors.hpp"
#include "whitney/fnomial.hpp"
#include "whitney/fseq.hpp"
#include "whitney/layer_poset.hpp"
#include "whitney/poset.hpp"
#include "whitney/prefab_poset.hpp"
