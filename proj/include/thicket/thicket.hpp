#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "perm.hpp"
#include "root_system.hpp"
#include "partitions.hpp"
#include "bijections.hpp"
#include "category_type.hpp"
#include "derived.hpp"
#include "classifier.hpp"
#include "render.hpp"
#include "json_io.hpp"
#include "verify.hpp"
