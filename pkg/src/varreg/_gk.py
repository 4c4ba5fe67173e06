"""Gauss-Kronrod G10/K21 rule on [-1, 1] and the panel acceptance rule.

Node ordering: ``KRONROD_NODES[i]`` for i = 0..9 are the positive abscissae in
decreasing order, index 10 is the centre.  Odd indices carry the Gauss
points.  Values are the QUADPACK ``qk21`` constants.
"""
import numpy as np

KRONROD_NODES = np.array([
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.0,
])
KRONROD_WEIGHTS = np.array([
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208980484440,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
GAUSS_WEIGHTS_HALF = np.array([
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])

# full 21-point layout: -x0..-x9, 0, x9..x0
NODES = np.concatenate([-KRONROD_NODES[:10], [0.0], KRONROD_NODES[9::-1]])
WK = np.concatenate([KRONROD_WEIGHTS[:10], [KRONROD_WEIGHTS[10]], KRONROD_WEIGHTS[9::-1]])
WG = np.zeros(21)
WG[1:10:2] = GAUSS_WEIGHTS_HALF
WG[11:20:2] = GAUSS_WEIGHTS_HALF[::-1]

#: Multiple of machine epsilon times the panel's absolute integral below which
#: a panel is accepted regardless of the requested tolerance.
ROUNDOFF_FACTOR = 50.0
EPS = float(np.finfo(float).eps)
#: Panels narrower than this (in the unit parameter) are never split.
MIN_WIDTH = 1e-13
