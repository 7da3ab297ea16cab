#include <projemb/basis.h>

namespace projemb {

// Standard STO-3G exponents and contraction coefficients, H through Ar.
std::string_view sto3g_text() {
  static constexpr std::string_view text = R"STO3G(
H
S 3
  3.4252509100E+00  1.5432897000E-01
  6.2391373000E-01  5.3532814000E-01
  1.6885540000E-01  4.4463454000E-01
****
He
S 3
  6.3624213900E+00  1.5432897000E-01
  1.1589230000E+00  5.3532814000E-01
  3.1364979000E-01  4.4463454000E-01
****
Li
S 3
  1.6119575000E+01  1.5432897000E-01
  2.9362007000E+00  5.3532814000E-01
  7.9465050000E-01  4.4463454000E-01
S 3
  6.3628970000E-01  -9.9967230000E-02
  1.4786010000E-01  3.9951283000E-01
  4.8088700000E-02  7.0011547000E-01
P 3
  6.3628970000E-01  1.5591627000E-01
  1.4786010000E-01  6.0768372000E-01
  4.8088700000E-02  3.9195739000E-01
****
Be
S 3
  3.0167871000E+01  1.5432897000E-01
  5.4951153000E+00  5.3532814000E-01
  1.4871927000E+00  4.4463454000E-01
S 3
  1.3148331000E+00  -9.9967230000E-02
  3.0553890000E-01  3.9951283000E-01
  9.9370700000E-02  7.0011547000E-01
P 3
  1.3148331000E+00  1.5591627000E-01
  3.0553890000E-01  6.0768372000E-01
  9.9370700000E-02  3.9195739000E-01
****
B
S 3
  4.8791113000E+01  1.5432897000E-01
  8.8873622000E+00  5.3532814000E-01
  2.4052670000E+00  4.4463454000E-01
S 3
  2.2369561000E+00  -9.9967230000E-02
  5.1982050000E-01  3.9951283000E-01
  1.6906180000E-01  7.0011547000E-01
P 3
  2.2369561000E+00  1.5591627000E-01
  5.1982050000E-01  6.0768372000E-01
  1.6906180000E-01  3.9195739000E-01
****
C
S 3
  7.1616837000E+01  1.5432897000E-01
  1.3045096000E+01  5.3532814000E-01
  3.5305122000E+00  4.4463454000E-01
S 3
  2.9412494000E+00  -9.9967230000E-02
  6.8348310000E-01  3.9951283000E-01
  2.2228990000E-01  7.0011547000E-01
P 3
  2.9412494000E+00  1.5591627000E-01
  6.8348310000E-01  6.0768372000E-01
  2.2228990000E-01  3.9195739000E-01
****
N
S 3
  9.9106169000E+01  1.5432897000E-01
  1.8052312000E+01  5.3532814000E-01
  4.8856602000E+00  4.4463454000E-01
S 3
  3.7804559000E+00  -9.9967230000E-02
  8.7849660000E-01  3.9951283000E-01
  2.8571440000E-01  7.0011547000E-01
P 3
  3.7804559000E+00  1.5591627000E-01
  8.7849660000E-01  6.0768372000E-01
  2.8571440000E-01  3.9195739000E-01
****
O
S 3
  1.3070932000E+02  1.5432897000E-01
  2.3808861000E+01  5.3532814000E-01
  6.4436083000E+00  4.4463454000E-01
S 3
  5.0331513000E+00  -9.9967230000E-02
  1.1695961000E+00  3.9951283000E-01
  3.8038900000E-01  7.0011547000E-01
P 3
  5.0331513000E+00  1.5591627000E-01
  1.1695961000E+00  6.0768372000E-01
  3.8038900000E-01  3.9195739000E-01
****
F
S 3
  1.6667913000E+02  1.5432897000E-01
  3.0360812000E+01  5.3532814000E-01
  8.2168207000E+00  4.4463454000E-01
S 3
  6.4648032000E+00  -9.9967230000E-02
  1.5022812000E+00  3.9951283000E-01
  4.8858850000E-01  7.0011547000E-01
P 3
  6.4648032000E+00  1.5591627000E-01
  1.5022812000E+00  6.0768372000E-01
  4.8858850000E-01  3.9195739000E-01
****
Ne
S 3
  2.0701561000E+02  1.5432897000E-01
  3.7708151000E+01  5.3532814000E-01
  1.0205297000E+01  4.4463454000E-01
S 3
  8.2463151000E+00  -9.9967230000E-02
  1.9162662000E+00  3.9951283000E-01
  6.2322930000E-01  7.0011547000E-01
P 3
  8.2463151000E+00  1.5591627000E-01
  1.9162662000E+00  6.0768372000E-01
  6.2322930000E-01  3.9195739000E-01
****
Na
S 3
  2.5077243000E+02  1.5432896730E-01
  4.5678511000E+01  5.3532814230E-01
  1.2362388000E+01  4.4463454220E-01
S 3
  1.2040193000E+01  -9.9967229190E-02
  2.7978819000E+00  3.9951282610E-01
  9.0995800000E-01  7.0011546890E-01
S 3
  1.4787406000E+00  -2.1962036900E-01
  4.1256490000E-01  2.2559543360E-01
  1.6147510000E-01  9.0039842600E-01
P 3
  1.2040193000E+01  1.5591627500E-01
  2.7978819000E+00  6.0768371860E-01
  9.0995800000E-01  3.9195739310E-01
P 3
  1.4787406000E+00  1.0587604290E-02
  4.1256490000E-01  5.9516700530E-01
  1.6147510000E-01  4.6200101200E-01
****
Mg
S 3
  2.9923740000E+02  1.5432896730E-01
  5.4506470000E+01  5.3532814230E-01
  1.4751580000E+01  4.4463454220E-01
S 3
  1.5121820000E+01  -9.9967229190E-02
  3.5139870000E+00  3.9951282610E-01
  1.1428570000E+00  7.0011546890E-01
S 3
  1.3954480000E+00  -2.1962036900E-01
  3.8932600000E-01  2.2559543360E-01
  1.5238000000E-01  9.0039842600E-01
P 3
  1.5121820000E+01  1.5591627500E-01
  3.5139870000E+00  6.0768371860E-01
  1.1428570000E+00  3.9195739310E-01
P 3
  1.3954480000E+00  1.0587604290E-02
  3.8932600000E-01  5.9516700530E-01
  1.5238000000E-01  4.6200101200E-01
****
Al
S 3
  3.5142147670E+02  1.5432896730E-01
  6.4011860670E+01  5.3532814230E-01
  1.7324107610E+01  4.4463454220E-01
S 3
  1.8899396210E+01  -9.9967229190E-02
  4.3918132330E+00  3.9951282610E-01
  1.4283539700E+00  7.0011546890E-01
S 3
  1.3954482930E+00  -2.1962036900E-01
  3.8932653180E-01  2.2559543360E-01
  1.5237976590E-01  9.0039842600E-01
P 3
  1.8899396210E+01  1.5591627500E-01
  4.3918132330E+00  6.0768371860E-01
  1.4283539700E+00  3.9195739310E-01
P 3
  1.3954482930E+00  1.0587604290E-02
  3.8932653180E-01  5.9516700530E-01
  1.5237976590E-01  4.6200101200E-01
****
Si
S 3
  4.0779755140E+02  1.5432896730E-01
  7.4280833050E+01  5.3532814230E-01
  2.0103292290E+01  4.4463454220E-01
S 3
  2.3193656060E+01  -9.9967229190E-02
  5.3897068710E+00  3.9951282610E-01
  1.7528999520E+00  7.0011546890E-01
S 3
  1.4787406220E+00  -2.1962036900E-01
  4.1256488010E-01  2.2559543360E-01
  1.6147509790E-01  9.0039842600E-01
P 3
  2.3193656060E+01  1.5591627500E-01
  5.3897068710E+00  6.0768371860E-01
  1.7528999520E+00  3.9195739310E-01
P 3
  1.4787406220E+00  1.0587604290E-02
  4.1256488010E-01  5.9516700530E-01
  1.6147509790E-01  4.6200101200E-01
****
P
S 3
  4.6836563780E+02  1.5432896730E-01
  8.5313385590E+01  5.3532814230E-01
  2.3089131560E+01  4.4463454220E-01
S 3
  2.8032639580E+01  -9.9967229190E-02
  6.5141825770E+00  3.9951282610E-01
  2.1186143520E+00  7.0011546890E-01
S 3
  1.7431032310E+00  -2.1962036900E-01
  4.8632137710E-01  2.2559543360E-01
  1.9034289090E-01  9.0039842600E-01
P 3
  2.8032639580E+01  1.5591627500E-01
  6.5141825770E+00  6.0768371860E-01
  2.1186143520E+00  3.9195739310E-01
P 3
  1.7431032310E+00  1.0587604290E-02
  4.8632137710E-01  5.9516700530E-01
  1.9034289090E-01  4.6200101200E-01
****
S
S 3
  5.3312573590E+02  1.5432896730E-01
  9.7109518300E+01  5.3532814230E-01
  2.6281625420E+01  4.4463454220E-01
S 3
  3.3329751730E+01  -9.9967229190E-02
  7.7451175210E+00  3.9951282610E-01
  2.5189525990E+00  7.0011546890E-01
S 3
  2.0291942740E+00  -2.1962036900E-01
  5.6614005180E-01  2.2559543360E-01
  2.2158337920E-01  9.0039842600E-01
P 3
  3.3329751730E+01  1.5591627500E-01
  7.7451175210E+00  6.0768371860E-01
  2.5189525990E+00  3.9195739310E-01
P 3
  2.0291942740E+00  1.0587604290E-02
  5.6614005180E-01  5.9516700530E-01
  2.2158337920E-01  4.6200101200E-01
****
Cl
S 3
  6.0134561360E+02  1.5432896730E-01
  1.0953585420E+02  5.3532814230E-01
  2.9644676860E+01  4.4463454220E-01
S 3
  3.8960418890E+01  -9.9967229190E-02
  9.0535634770E+00  3.9951282610E-01
  2.9444998340E+00  7.0011546890E-01
S 3
  2.1293864950E+00  -2.1962036900E-01
  5.9409342740E-01  2.2559543360E-01
  2.3252414100E-01  9.0039842600E-01
P 3
  3.8960418890E+01  1.5591627500E-01
  9.0535634770E+00  6.0768371860E-01
  2.9444998340E+00  3.9195739310E-01
P 3
  2.1293864950E+00  1.0587604290E-02
  5.9409342740E-01  5.9516700530E-01
  2.3252414100E-01  4.6200101200E-01
****
Ar
S 3
  6.7444651840E+02  1.5432896730E-01
  1.2285127530E+02  5.3532814230E-01
  3.3248349450E+01  4.4463454220E-01
S 3
  4.5164243920E+01  -9.9967229190E-02
  1.0495199000E+01  3.9951282610E-01
  3.4133644480E+00  7.0011546890E-01
S 3
  2.6213665180E+00  -2.1962036900E-01
  7.3135460500E-01  2.2559543360E-01
  2.8624723560E-01  9.0039842600E-01
P 3
  4.5164243920E+01  1.5591627500E-01
  1.0495199000E+01  6.0768371860E-01
  3.4133644480E+00  3.9195739310E-01
P 3
  2.6213665180E+00  1.0587604290E-02
  7.3135460500E-01  5.9516700530E-01
  2.8624723560E-01  4.6200101200E-01
****
)STO3G";
  return text;
}

} // namespace projemb
