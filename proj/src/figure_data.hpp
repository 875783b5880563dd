// Reference curve samples used by the figure-reproduction checks.
// Values are printed to three decimals; compare with tolerance 5e-4.
#pragma once

namespace polyra::testdata {

struct XY { double x; double y; };

inline constexpr XY kTwoTypeCurveM1[] = {
    {0.010, 0.669},
    {0.020, 0.671},
    {0.030, 0.673},
    {0.040, 0.676},
    {0.050, 0.678},
    {0.060, 0.680},
    {0.070, 0.683},
    {0.080, 0.685},
    {0.090, 0.687},
    {0.100, 0.690},
    {0.110, 0.692},
    {0.120, 0.694},
    {0.130, 0.697},
    {0.140, 0.699},
    {0.150, 0.702},
    {0.160, 0.704},
    {0.170, 0.707},
    {0.180, 0.709},
    {0.190, 0.712},
    {0.200, 0.714},
    {0.210, 0.717},
    {0.220, 0.719},
    {0.230, 0.722},
    {0.240, 0.725},
    {0.250, 0.727},
    {0.260, 0.730},
    {0.270, 0.733},
    {0.280, 0.735},
    {0.290, 0.738},
    {0.300, 0.741},
    {0.310, 0.743},
    {0.320, 0.746},
    {0.330, 0.749},
    {0.340, 0.752},
    {0.350, 0.755},
    {0.360, 0.758},
    {0.370, 0.760},
    {0.380, 0.763},
    {0.390, 0.766},
    {0.400, 0.769},
    {0.410, 0.772},
    {0.420, 0.775},
    {0.430, 0.778},
    {0.440, 0.781},
    {0.450, 0.784},
    {0.460, 0.787},
    {0.470, 0.791},
    {0.480, 0.794},
    {0.490, 0.797},
    {0.500, 0.800},
    {0.510, 0.803},
    {0.520, 0.806},
    {0.530, 0.810},
    {0.540, 0.813},
    {0.550, 0.816},
    {0.560, 0.820},
    {0.570, 0.823},
    {0.580, 0.826},
    {0.590, 0.830},
    {0.600, 0.833},
    {0.610, 0.837},
    {0.620, 0.840},
    {0.630, 0.844},
    {0.640, 0.847},
    {0.650, 0.851},
    {0.660, 0.855},
    {0.670, 0.858},
    {0.680, 0.862},
    {0.690, 0.866},
    {0.700, 0.870},
    {0.710, 0.873},
    {0.720, 0.877},
    {0.730, 0.881},
    {0.740, 0.885},
    {0.750, 0.889},
    {0.760, 0.893},
    {0.770, 0.897},
    {0.780, 0.901},
    {0.790, 0.905},
    {0.800, 0.909},
    {0.810, 0.913},
    {0.820, 0.917},
    {0.830, 0.922},
    {0.840, 0.926},
    {0.850, 0.930},
    {0.860, 0.935},
    {0.870, 0.939},
    {0.880, 0.943},
    {0.890, 0.948},
    {0.900, 0.952},
    {0.910, 0.957},
    {0.920, 0.962},
    {0.930, 0.966},
    {0.940, 0.971},
    {0.950, 0.976},
    {0.960, 0.980},
    {0.970, 0.985},
    {0.980, 0.990},
    {0.990, 0.995}};
inline constexpr XY kTwoTypeCurveM0[] = {
    {0.010, 0.503},
    {0.020, 0.505},
    {0.030, 0.508},
    {0.040, 0.510},
    {0.050, 0.513},
    {0.060, 0.515},
    {0.070, 0.518},
    {0.080, 0.521},
    {0.090, 0.524},
    {0.100, 0.526},
    {0.110, 0.529},
    {0.120, 0.532},
    {0.130, 0.535},
    {0.140, 0.538},
    {0.150, 0.541},
    {0.160, 0.543},
    {0.170, 0.546},
    {0.180, 0.549},
    {0.190, 0.552},
    {0.200, 0.556},
    {0.210, 0.559},
    {0.220, 0.562},
    {0.230, 0.565},
    {0.240, 0.568},
    {0.250, 0.571},
    {0.260, 0.575},
    {0.270, 0.578},
    {0.280, 0.581},
    {0.290, 0.585},
    {0.300, 0.588},
    {0.310, 0.592},
    {0.320, 0.595},
    {0.330, 0.599},
    {0.340, 0.602},
    {0.350, 0.606},
    {0.360, 0.610},
    {0.370, 0.613},
    {0.380, 0.617},
    {0.390, 0.621},
    {0.400, 0.625},
    {0.410, 0.629},
    {0.420, 0.633},
    {0.430, 0.637},
    {0.440, 0.641},
    {0.450, 0.645},
    {0.460, 0.649},
    {0.470, 0.654},
    {0.480, 0.658},
    {0.490, 0.662},
    {0.500, 0.667},
    {0.510, 0.671},
    {0.520, 0.676},
    {0.530, 0.680},
    {0.540, 0.685},
    {0.550, 0.690},
    {0.560, 0.694},
    {0.570, 0.699},
    {0.580, 0.704},
    {0.590, 0.709},
    {0.600, 0.714},
    {0.610, 0.719},
    {0.620, 0.725},
    {0.630, 0.730},
    {0.640, 0.735},
    {0.650, 0.741},
    {0.660, 0.746},
    {0.670, 0.752},
    {0.680, 0.758},
    {0.690, 0.763},
    {0.700, 0.769},
    {0.710, 0.775},
    {0.720, 0.781},
    {0.730, 0.787},
    {0.740, 0.794},
    {0.750, 0.800},
    {0.760, 0.806},
    {0.770, 0.813},
    {0.780, 0.820},
    {0.790, 0.826},
    {0.800, 0.833},
    {0.810, 0.840},
    {0.820, 0.847},
    {0.830, 0.855},
    {0.840, 0.862},
    {0.850, 0.870},
    {0.860, 0.877},
    {0.870, 0.885},
    {0.880, 0.893},
    {0.890, 0.901},
    {0.900, 0.909},
    {0.910, 0.917},
    {0.920, 0.926},
    {0.930, 0.935},
    {0.940, 0.943},
    {0.950, 0.952},
    {0.960, 0.962},
    {0.970, 0.971},
    {0.980, 0.980},
    {0.990, 0.990}};
inline constexpr XY kThreeTypeCurveM2[] = {
    {0.010, 0.503},
    {0.020, 0.505},
    {0.030, 0.508},
    {0.040, 0.510},
    {0.050, 0.513},
    {0.060, 0.515},
    {0.070, 0.518},
    {0.080, 0.521},
    {0.090, 0.524},
    {0.100, 0.526},
    {0.110, 0.529},
    {0.120, 0.532},
    {0.130, 0.535},
    {0.140, 0.538},
    {0.150, 0.541},
    {0.160, 0.543},
    {0.170, 0.546},
    {0.180, 0.549},
    {0.190, 0.552},
    {0.200, 0.556},
    {0.210, 0.559},
    {0.220, 0.562},
    {0.230, 0.565},
    {0.240, 0.568},
    {0.250, 0.571},
    {0.260, 0.575},
    {0.270, 0.578},
    {0.280, 0.581},
    {0.290, 0.585},
    {0.300, 0.588},
    {0.310, 0.592},
    {0.320, 0.595},
    {0.330, 0.599},
    {0.340, 0.602},
    {0.350, 0.606},
    {0.360, 0.610},
    {0.370, 0.613},
    {0.380, 0.617},
    {0.390, 0.621},
    {0.400, 0.625},
    {0.410, 0.629},
    {0.420, 0.633},
    {0.430, 0.637},
    {0.440, 0.641},
    {0.450, 0.645},
    {0.460, 0.649},
    {0.470, 0.654},
    {0.480, 0.658},
    {0.490, 0.662},
    {0.500, 0.667},
    {0.510, 0.671},
    {0.520, 0.676},
    {0.530, 0.680},
    {0.540, 0.685},
    {0.550, 0.690},
    {0.560, 0.694},
    {0.570, 0.699},
    {0.580, 0.704},
    {0.590, 0.709},
    {0.600, 0.714},
    {0.610, 0.719},
    {0.620, 0.725},
    {0.630, 0.730},
    {0.640, 0.735},
    {0.650, 0.741},
    {0.660, 0.746},
    {0.670, 0.752},
    {0.680, 0.758},
    {0.690, 0.763},
    {0.700, 0.769},
    {0.710, 0.775},
    {0.720, 0.781},
    {0.730, 0.787},
    {0.740, 0.794},
    {0.750, 0.800},
    {0.760, 0.806},
    {0.770, 0.813},
    {0.780, 0.820},
    {0.790, 0.826},
    {0.800, 0.833},
    {0.810, 0.840},
    {0.820, 0.847},
    {0.830, 0.855},
    {0.840, 0.862},
    {0.850, 0.870},
    {0.860, 0.877},
    {0.870, 0.885},
    {0.880, 0.893},
    {0.890, 0.901},
    {0.900, 0.909},
    {0.910, 0.917},
    {0.920, 0.926},
    {0.930, 0.935},
    {0.940, 0.943},
    {0.950, 0.952},
    {0.960, 0.962},
    {0.970, 0.971},
    {0.980, 0.980},
    {0.990, 0.990}};
inline constexpr XY kThreeTypeCurveM1[] = {
    {0.010, 0.403},
    {0.020, 0.406},
    {0.030, 0.409},
    {0.040, 0.411},
    {0.050, 0.414},
    {0.060, 0.417},
    {0.070, 0.420},
    {0.080, 0.423},
    {0.090, 0.426},
    {0.100, 0.429},
    {0.110, 0.433},
    {0.120, 0.436},
    {0.130, 0.439},
    {0.140, 0.442},
    {0.150, 0.445},
    {0.160, 0.449},
    {0.170, 0.452},
    {0.180, 0.455},
    {0.190, 0.459},
    {0.200, 0.462},
    {0.210, 0.466},
    {0.220, 0.469},
    {0.230, 0.473},
    {0.240, 0.476},
    {0.250, 0.480},
    {0.260, 0.484},
    {0.270, 0.487},
    {0.280, 0.491},
    {0.290, 0.495},
    {0.300, 0.499},
    {0.310, 0.503},
    {0.320, 0.507},
    {0.330, 0.511},
    {0.340, 0.515},
    {0.350, 0.519},
    {0.360, 0.523},
    {0.370, 0.527},
    {0.380, 0.532},
    {0.390, 0.536},
    {0.400, 0.541},
    {0.410, 0.545},
    {0.420, 0.550},
    {0.430, 0.554},
    {0.440, 0.559},
    {0.450, 0.564},
    {0.460, 0.568},
    {0.470, 0.573},
    {0.480, 0.578},
    {0.490, 0.583},
    {0.500, 0.588},
    {0.510, 0.593},
    {0.520, 0.599},
    {0.530, 0.604},
    {0.540, 0.609},
    {0.550, 0.615},
    {0.560, 0.620},
    {0.570, 0.626},
    {0.580, 0.632},
    {0.590, 0.638},
    {0.600, 0.644},
    {0.610, 0.650},
    {0.620, 0.656},
    {0.630, 0.662},
    {0.640, 0.668},
    {0.650, 0.675},
    {0.660, 0.681},
    {0.670, 0.688},
    {0.680, 0.695},
    {0.690, 0.702},
    {0.700, 0.709},
    {0.710, 0.716},
    {0.720, 0.723},
    {0.730, 0.731},
    {0.740, 0.738},
    {0.750, 0.746},
    {0.760, 0.754},
    {0.770, 0.762},
    {0.780, 0.770},
    {0.790, 0.778},
    {0.800, 0.787},
    {0.810, 0.795},
    {0.820, 0.804},
    {0.830, 0.813},
    {0.840, 0.822},
    {0.850, 0.832},
    {0.860, 0.841},
    {0.870, 0.851},
    {0.880, 0.861},
    {0.890, 0.871},
    {0.900, 0.881},
    {0.910, 0.892},
    {0.920, 0.903},
    {0.930, 0.914},
    {0.940, 0.926},
    {0.950, 0.937},
    {0.960, 0.949},
    {0.970, 0.961},
    {0.980, 0.974},
    {0.990, 0.987}};
inline constexpr XY kThreeTypeCurveM0[] = {
    {0.010, 0.336},
    {0.020, 0.338},
    {0.030, 0.340},
    {0.040, 0.342},
    {0.050, 0.345},
    {0.060, 0.347},
    {0.070, 0.350},
    {0.080, 0.352},
    {0.090, 0.355},
    {0.100, 0.357},
    {0.110, 0.360},
    {0.120, 0.362},
    {0.130, 0.365},
    {0.140, 0.368},
    {0.150, 0.370},
    {0.160, 0.373},
    {0.170, 0.376},
    {0.180, 0.379},
    {0.190, 0.382},
    {0.200, 0.385},
    {0.210, 0.388},
    {0.220, 0.391},
    {0.230, 0.394},
    {0.240, 0.397},
    {0.250, 0.400},
    {0.260, 0.403},
    {0.270, 0.407},
    {0.280, 0.410},
    {0.290, 0.413},
    {0.300, 0.417},
    {0.310, 0.420},
    {0.320, 0.424},
    {0.330, 0.427},
    {0.340, 0.431},
    {0.350, 0.435},
    {0.360, 0.439},
    {0.370, 0.442},
    {0.380, 0.446},
    {0.390, 0.450},
    {0.400, 0.455},
    {0.410, 0.459},
    {0.420, 0.463},
    {0.430, 0.467},
    {0.440, 0.472},
    {0.450, 0.476},
    {0.460, 0.481},
    {0.470, 0.485},
    {0.480, 0.490},
    {0.490, 0.495},
    {0.500, 0.500},
    {0.510, 0.505},
    {0.520, 0.510},
    {0.530, 0.515},
    {0.540, 0.521},
    {0.550, 0.526},
    {0.560, 0.532},
    {0.570, 0.538},
    {0.580, 0.543},
    {0.590, 0.549},
    {0.600, 0.556},
    {0.610, 0.562},
    {0.620, 0.568},
    {0.630, 0.575},
    {0.640, 0.581},
    {0.650, 0.588},
    {0.660, 0.595},
    {0.670, 0.602},
    {0.680, 0.610},
    {0.690, 0.617},
    {0.700, 0.625},
    {0.710, 0.633},
    {0.720, 0.641},
    {0.730, 0.649},
    {0.740, 0.658},
    {0.750, 0.667},
    {0.760, 0.676},
    {0.770, 0.685},
    {0.780, 0.694},
    {0.790, 0.704},
    {0.800, 0.714},
    {0.810, 0.725},
    {0.820, 0.735},
    {0.830, 0.746},
    {0.840, 0.758},
    {0.850, 0.769},
    {0.860, 0.781},
    {0.870, 0.794},
    {0.880, 0.806},
    {0.890, 0.820},
    {0.900, 0.833},
    {0.910, 0.847},
    {0.920, 0.862},
    {0.930, 0.877},
    {0.940, 0.893},
    {0.950, 0.909},
    {0.960, 0.926},
    {0.970, 0.943},
    {0.980, 0.962},
    {0.990, 0.980}};
inline constexpr XY kGapCurveF2CaseLow[] = {
    {1.000, 1.000},
    {1.100, 0.957},
    {1.200, 0.923},
    {1.300, 0.897},
    {1.400, 0.875},
    {1.500, 0.857},
    {1.600, 0.842},
    {1.700, 0.829},
    {1.800, 0.818},
    {1.900, 0.809},
    {2.000, 0.800},
    {2.100, 0.808},
    {2.200, 0.815},
    {2.300, 0.821},
    {2.400, 0.828},
    {2.500, 0.833},
    {2.600, 0.839},
    {2.700, 0.844},
    {2.800, 0.848},
    {2.900, 0.853},
    {3.000, 0.857},
    {3.100, 0.861},
    {3.200, 0.865},
    {3.300, 0.868},
    {3.400, 0.872},
    {3.500, 0.875},
    {3.600, 0.878},
    {3.700, 0.881},
    {3.800, 0.884},
    {3.900, 0.886},
    {4.000, 0.889},
    {4.100, 0.891},
    {4.200, 0.894},
    {4.300, 0.896},
    {4.400, 0.898},
    {4.500, 0.900},
    {4.600, 0.902},
    {4.700, 0.904},
    {4.800, 0.906},
    {4.900, 0.907},
    {5.000, 0.909},
    {5.100, 0.911},
    {5.200, 0.912},
    {5.300, 0.914},
    {5.400, 0.915},
    {5.500, 0.917},
    {5.600, 0.918},
    {5.700, 0.919},
    {5.800, 0.921},
    {5.900, 0.922},
    {6.000, 0.923},
    {6.100, 0.924},
    {6.200, 0.925},
    {6.300, 0.926},
    {6.400, 0.928},
    {6.500, 0.929},
    {6.600, 0.930},
    {6.700, 0.931},
    {6.800, 0.932},
    {6.900, 0.932},
    {7.000, 0.933},
    {7.100, 0.934},
    {7.200, 0.935},
    {7.300, 0.936},
    {7.400, 0.937},
    {7.500, 0.938},
    {7.600, 0.938},
    {7.700, 0.939},
    {7.800, 0.940},
    {7.900, 0.940},
    {8.000, 0.941},
    {8.100, 0.942},
    {8.200, 0.943},
    {8.300, 0.943},
    {8.400, 0.944},
    {8.500, 0.944},
    {8.600, 0.945},
    {8.700, 0.946},
    {8.800, 0.946},
    {8.900, 0.947},
    {9.000, 0.947},
    {9.100, 0.948},
    {9.200, 0.948},
    {9.300, 0.949},
    {9.400, 0.949},
    {9.500, 0.950},
    {9.600, 0.950},
    {9.700, 0.951},
    {9.800, 0.951},
    {9.900, 0.952}};
inline constexpr XY kGapCurveF1CaseHigh[] = {
    {1.000, 0.816},
    {1.100, 0.849},
    {1.200, 0.877},
    {1.300, 0.899},
    {1.400, 0.917},
    {1.500, 0.932},
    {1.600, 0.945},
    {1.700, 0.955},
    {1.800, 0.963},
    {1.900, 0.970},
    {2.000, 0.975},
    {2.100, 0.980},
    {2.200, 0.983},
    {2.300, 0.986},
    {2.400, 0.989},
    {2.500, 0.991},
    {2.600, 0.993},
    {2.700, 0.994},
    {2.800, 0.995},
    {2.900, 0.996},
    {3.000, 0.997},
    {3.100, 0.997},
    {3.200, 0.998},
    {3.300, 0.998},
    {3.400, 0.998},
    {3.500, 0.999},
    {3.600, 0.999},
    {3.700, 0.999},
    {3.800, 0.999},
    {3.900, 0.999},
    {4.000, 1.000},
    {4.100, 1.000},
    {4.200, 1.000},
    {4.300, 1.000},
    {4.400, 1.000},
    {4.500, 1.000},
    {4.600, 1.000},
    {4.700, 1.000},
    {4.800, 1.000},
    {4.900, 1.000},
    {5.000, 1.000},
    {5.100, 1.000},
    {5.200, 1.000},
    {5.300, 1.000},
    {5.400, 1.000},
    {5.500, 1.000},
    {5.600, 1.000},
    {5.700, 1.000},
    {5.800, 1.000},
    {5.900, 1.000},
    {6.000, 1.000},
    {6.100, 1.000},
    {6.200, 1.000},
    {6.300, 1.000},
    {6.400, 1.000},
    {6.500, 1.000},
    {6.600, 1.000},
    {6.700, 1.000},
    {6.800, 1.000},
    {6.900, 1.000},
    {7.000, 1.000},
    {7.100, 1.000},
    {7.200, 1.000},
    {7.300, 1.000},
    {7.400, 1.000},
    {7.500, 1.000},
    {7.600, 1.000},
    {7.700, 1.000},
    {7.800, 1.000},
    {7.900, 1.000},
    {8.000, 1.000},
    {8.100, 1.000},
    {8.200, 1.000},
    {8.300, 1.000},
    {8.400, 1.000},
    {8.500, 1.000},
    {8.600, 1.000},
    {8.700, 1.000},
    {8.800, 1.000},
    {8.900, 1.000},
    {9.000, 1.000},
    {9.100, 1.000},
    {9.200, 1.000},
    {9.300, 1.000},
    {9.400, 1.000},
    {9.500, 1.000},
    {9.600, 1.000},
    {9.700, 1.000},
    {9.800, 1.000},
    {9.900, 1.000}};
inline constexpr XY kGapCurveF2CaseHigh[] = {
    {1.000, 1.000},
    {1.100, 0.958},
    {1.200, 0.929},
    {1.300, 0.906},
    {1.400, 0.889},
    {1.500, 0.875},
    {1.600, 0.864},
    {1.700, 0.854},
    {1.800, 0.846},
    {1.900, 0.839},
    {2.000, 0.833},
    {2.100, 0.844},
    {2.200, 0.853},
    {2.300, 0.861},
    {2.400, 0.868},
    {2.500, 0.875},
    {2.600, 0.881},
    {2.700, 0.886},
    {2.800, 0.891},
    {2.900, 0.896},
    {3.000, 0.900},
    {3.100, 0.904},
    {3.200, 0.907},
    {3.300, 0.911},
    {3.400, 0.914},
    {3.500, 0.917},
    {3.600, 0.919},
    {3.700, 0.922},
    {3.800, 0.924},
    {3.900, 0.926},
    {4.000, 0.929},
    {4.100, 0.931},
    {4.200, 0.932},
    {4.300, 0.934},
    {4.400, 0.936},
    {4.500, 0.938},
    {4.600, 0.939},
    {4.700, 0.940},
    {4.800, 0.942},
    {4.900, 0.943},
    {5.000, 0.944},
    {5.100, 0.946},
    {5.200, 0.947},
    {5.300, 0.948},
    {5.400, 0.949},
    {5.500, 0.950},
    {5.600, 0.951},
    {5.700, 0.952},
    {5.800, 0.953},
    {5.900, 0.954},
    {6.000, 0.955},
    {6.100, 0.955},
    {6.200, 0.956},
    {6.300, 0.957},
    {6.400, 0.958},
    {6.500, 0.958},
    {6.600, 0.959},
    {6.700, 0.960},
    {6.800, 0.960},
    {6.900, 0.961},
    {7.000, 0.962},
    {7.100, 0.962},
    {7.200, 0.963},
    {7.300, 0.963},
    {7.400, 0.964},
    {7.500, 0.964},
    {7.600, 0.965},
    {7.700, 0.965},
    {7.800, 0.966},
    {7.900, 0.966},
    {8.000, 0.967},
    {8.100, 0.967},
    {8.200, 0.968},
    {8.300, 0.968},
    {8.400, 0.968},
    {8.500, 0.969},
    {8.600, 0.969},
    {8.700, 0.970},
    {8.800, 0.970},
    {8.900, 0.970},
    {9.000, 0.971},
    {9.100, 0.971},
    {9.200, 0.971},
    {9.300, 0.972},
    {9.400, 0.972},
    {9.500, 0.972},
    {9.600, 0.973},
    {9.700, 0.973},
    {9.800, 0.973},
    {9.900, 0.973}};
inline constexpr XY kGapCurveProductCaseHigh[] = {
    {1.000, 0.816},
    {1.100, 0.814},
    {1.200, 0.814},
    {1.300, 0.815},
    {1.400, 0.815},
    {1.500, 0.816},
    {1.600, 0.816},
    {1.700, 0.815},
    {1.800, 0.815},
    {1.900, 0.814},
    {2.000, 0.813},
    {2.100, 0.827},
    {2.200, 0.839},
    {2.300, 0.849},
    {2.400, 0.859},
    {2.500, 0.867},
    {2.600, 0.874},
    {2.700, 0.881},
    {2.800, 0.887},
    {2.900, 0.892},
    {3.000, 0.897},
    {3.100, 0.901},
    {3.200, 0.905},
    {3.300, 0.909},
    {3.400, 0.912},
    {3.500, 0.916},
    {3.600, 0.918},
    {3.700, 0.921},
    {3.800, 0.924},
    {3.900, 0.926},
    {4.000, 0.928},
    {4.100, 0.930},
    {4.200, 0.932},
    {4.300, 0.934},
    {4.400, 0.936},
    {4.500, 0.937},
    {4.600, 0.939},
    {4.700, 0.940},
    {4.800, 0.942},
    {4.900, 0.943},
    {5.000, 0.944},
    {5.100, 0.946},
    {5.200, 0.947},
    {5.300, 0.948},
    {5.400, 0.949},
    {5.500, 0.950},
    {5.600, 0.951},
    {5.700, 0.952},
    {5.800, 0.953},
    {5.900, 0.954},
    {6.000, 0.955},
    {6.100, 0.955},
    {6.200, 0.956},
    {6.300, 0.957},
    {6.400, 0.958},
    {6.500, 0.958},
    {6.600, 0.959},
    {6.700, 0.960},
    {6.800, 0.960},
    {6.900, 0.961},
    {7.000, 0.962},
    {7.100, 0.962},
    {7.200, 0.963},
    {7.300, 0.963},
    {7.400, 0.964},
    {7.500, 0.964},
    {7.600, 0.965},
    {7.700, 0.965},
    {7.800, 0.966},
    {7.900, 0.966},
    {8.000, 0.967},
    {8.100, 0.967},
    {8.200, 0.968},
    {8.300, 0.968},
    {8.400, 0.968},
    {8.500, 0.969},
    {8.600, 0.969},
    {8.700, 0.970},
    {8.800, 0.970},
    {8.900, 0.970},
    {9.000, 0.971},
    {9.100, 0.971},
    {9.200, 0.971},
    {9.300, 0.972},
    {9.400, 0.972},
    {9.500, 0.972},
    {9.600, 0.973},
    {9.700, 0.973},
    {9.800, 0.973},
    {9.900, 0.973}};

}  // namespace polyra::testdata
