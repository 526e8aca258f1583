#pragma once

#include "cocofiso/core.hpp"
#include "cocofiso/errors.hpp"
#include "cocofiso/normalize.hpp"
#include "cocofiso/engine.hpp"
#include "cocofiso/baselines.hpp"
#include "cocofiso/rank_analytics.hpp"
#include "cocofiso/sensitivity.hpp"
#include "cocofiso/io.hpp"
