#pragma once

// Umbrella header: the full bijection chain plus serialization.

#include "partlab/common.hpp"
#include "partlab/partition.hpp"
#include "partlab/matrix.hpp"
#include "partlab/path.hpp"
#include "partlab/squared.hpp"
#include "partlab/identity.hpp"
#include "partlab/io.hpp"
#include "partlab/cache.hpp"
