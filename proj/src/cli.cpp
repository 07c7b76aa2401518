#include "hookharm/errors.hpp"
