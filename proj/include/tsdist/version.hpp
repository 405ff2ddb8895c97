#pragma once

#define TSDIST_VERSION "0.1.0"
