#ifndef INVBANACH_TYPES_HPP
#define INVBANACH_TYPES_HPP

#include <Eigen/Dense>

namespace invbanach {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace invbanach

#endif  // INVBANACH_TYPES_HPP
