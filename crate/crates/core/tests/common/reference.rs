//! Reference series for regression checks.
//!
//! Each series is a list of `(x, y)` points, generated from tabulated data and
//! not edited by hand.

#![allow(dead_code)]

/// Repeated purification of `werner(0.8)`: `(step, value)` for A, B, C, D, ρ.
pub const PURIFICATION_TRAJECTORY_F80: [(&str, &[(f64, f64)]); 5] = [
    ("A", &[(0.0, 0.8), (1.0, 0.838150289017341), (2.0, 0.943639219205744), (3.0, 0.987973563442248), (4.0, 0.996853710474815), (5.0, 0.999934655859118), (6.0, 0.999998953074145), (7.0, 0.999999997939634), (8.0, 0.999999999999987), (9.0, 1.0)]),
    ("B", &[(0.0, 0.0666666666666667), (1.0, 0.0115606936416185), (2.0, 0.00430783037917882), (3.0, 0.00150309009788572), (4.0, 2.76932334742468e-05), (5.0, 5.21328134687818e-07), (6.0, 1.02963498652657e-09), (7.0, 6.61694177570048e-15), (8.0, 4.47802831600791e-21), (9.0, 1.12239289721692e-31)]),
    ("C", &[(0.0, 0.0666666666666667), (1.0, 0.0115606936416185), (2.0, 0.0260264752075387), (3.0, 0.00150309009788572), (4.0, 8.54028367982972e-05), (5.0, 9.26516457587025e-06), (6.0, 3.17290687175671e-09), (7.0, 1.08728425053921e-12), (8.0, 4.24060288329175e-18), (9.0, 1.75135692556441e-28)]),
    ("D", &[(0.0, 0.0666666666666667), (1.0, 0.138728323699422), (2.0, 0.0260264752075387), (3.0, 0.00902025636198019), (4.0, 0.00303319345491235), (5.0, 5.55576481711367e-05), (6.0, 1.04272331365065e-06), (7.0, 2.05927212471552e-09), (8.0, 1.32338835786674e-14), (9.0, 8.95605663201595e-21)]),
    ("rho", &[(0.0, 0.2), (1.0, 0.161849710982659), (2.0, 0.0563607807942562), (3.0, 0.0120264365577516), (4.0, 0.00314628952518489), (5.0, 6.53441408816948e-05), (6.0, 1.04692585550894e-06), (7.0, 2.06036602590783e-09), (8.0, 1.3238128659579e-14), (9.0, 8.95605680726388e-21)]),
];

/// Logical error against purification step for `werner(0.8)`, no swaps.
pub const CODED_PER_PURIFICATION_STEP_F80: [(&str, &[(f64, f64)]); 6] = [
    ("Uncoded", &[(0.0, 0.2), (1.0, 0.161849710982659), (2.0, 0.0563607807942562), (3.0, 0.0120264365577516), (4.0, 0.00314628952518489), (5.0, 6.53441408816948e-05)]),
    ("[[3,1]](0,1)", &[(0.0, 0.36), (1.0, 0.118834613788278), (2.0, 0.0902055486168801), (3.0, 0.00923334981037804), (4.0, 0.000366791693812929), (5.0, 2.93684503294145e-05)]),
    ("[[5,1]](1,0)", &[(0.0, 0.26272), (1.0, 0.187007847935365), (2.0, 0.0283338143756603), (3.0, 0.00141187563101863), (4.0, 9.8369935353726e-05), (5.0, 4.26929873675874e-08)]),
    ("[[9,1]](1,1)", &[(0.0, 0.396020224), (1.0, 0.172692535579632), (2.0, 0.0336990195262377), (3.0, 0.000437310042044392), (4.0, 3.02983730660067e-06), (5.0, 3.46976869458615e-09)]),
    ("[[13,1]](1,2)", &[(0.0, 0.553768805231881), (1.0, 0.163405046697577), (2.0, 0.0586685583567126), (3.0, 0.000699622373304787), (4.0, 1.06483572637206e-06), (5.0, 7.46995931777406e-09)]),
    ("[[11,1]](2,0)", &[(0.0, 0.3825984512), (1.0, 0.257914853319732), (2.0, 0.0209877741963513), (3.0, 0.000266982005182825), (4.0, 5.04285350755307e-06), (5.0, 4.60183002815029e-11)]),
];

/// Logical error against ρ₀ after one purification step, no swaps.
pub const SINGLE_PURIFICATION_CODES: [(&str, &[(f64, f64)]); 7] = [
    ("Uncoded", &[(0.01, 0.00673362760111702), (0.02, 0.013602337045828), (0.03, 0.0206078268109909), (0.04, 0.0277517344834052), (0.05, 0.0350356294536817), (0.06, 0.0424610051993068), (0.07, 0.0500292711484048), (0.08, 0.0577417441170655), (0.09, 0.0655996393146979), (0.1, 0.0736040609137056), (0.2, 0.161849710982659), (0.3, 0.264705882352941), (0.4, 0.37956204379562)]),
    ("[[5,1]](1,0)", &[(0.01, 0.000447341901503973), (0.02, 0.00180041231423078), (0.03, 0.00407448004165933), (0.04, 0.0072829541609617), (0.05, 0.0114372218933592), (0.06, 0.0165464859440497), (0.07, 0.0226176025365316), (0.08, 0.0296549214957519), (0.09, 0.0376601298636083), (0.1, 0.0466321006567847), (0.2, 0.187007847935365), (0.3, 0.398184332999732), (0.4, 0.626842682734104)]),
    ("[[3,1]](0,1)", &[(0.01, 0.000268723946412974), (0.02, 0.0010829824476527), (0.03, 0.00245455695174124), (0.04, 0.0043947128057843), (0.05, 0.00691413265009599), (0.06, 0.010022847054899), (0.07, 0.0137301625579291), (0.08, 0.0180445873007669), (0.09, 0.0229737545044285), (0.1, 0.0285243440705903), (0.2, 0.118834613788278), (0.3, 0.268522287807857), (0.4, 0.457707673742189)]),
    ("[[5,1]](0,2)", &[(0.01, 0.00022814672714544), (0.02, 0.000936250232353775), (0.03, 0.00215964572224292), (0.04, 0.00393330309930051), (0.05, 0.00629162589449639), (0.06, 0.00926823771534002), (0.07, 0.0128957568397379), (0.08, 0.017205559790359), (0.09, 0.0222275349446194), (0.1, 0.0279898274705944), (0.2, 0.130742692341781), (0.3, 0.315649612953981), (0.4, 0.548457377555658)]),
    ("[[11,1]](2,0)", &[(0.01, 4.83795072783177e-05), (0.02, 0.000382634824974581), (0.03, 0.00127544926857026), (0.04, 0.00298295215424804), (0.05, 0.00574242588154261), (0.06, 0.00977013880386846), (0.07, 0.0152593395214462), (0.08, 0.0223784483390036), (0.09, 0.0312694810461805), (0.1, 0.0420467388353263), (0.125, 0.0777312266624035), (0.14, 0.105286679491107), (0.175, 0.186803573287584), (0.2, 0.257914853319732), (0.3, 0.589392895679784), (0.4, 0.851517448108679)]),
    ("[[9,1]](1,1)", &[(0.01, 2.49493360434672e-05), (0.02, 0.000199904057223477), (0.03, 0.000675115201823839), (0.04, 0.00159984212116515), (0.05, 0.00312091059091757), (0.06, 0.00538122224992321), (0.07, 0.00851823129803086), (0.08, 0.012662406359555), (0.09, 0.0179356972742204), (0.1, 0.0244500282556729), (0.2, 0.172692535579631), (0.3, 0.454958814478235), (0.4, 0.745194502403271)]),
    ("[[13,1]](1,2)", &[(0.01, 1.55807151946963e-06), (0.02, 2.47584798066525e-05), (0.03, 0.000124288450541576), (0.04, 0.000388902150239123), (0.05, 0.000938502728039525), (0.06, 0.00192045372823713), (0.07, 0.0035051792598092), (0.08, 0.00588113289072623), (0.09, 0.00924923524859578), (0.1, 0.0138168990828472), (0.2, 0.163405046697577), (0.3, 0.505073347065679), (0.4, 0.826228574173297)]),
];

/// Burst b: `(b, F0, [(swap step, ρ)])`. Step 0 is the raw Werner pair.
pub const BURST_SWAP_ERROR: [(u32, f64, &[(f64, f64)]); 9] = [
    (3, 0.90, &[(0.0, 0.1), (1.0, 0.00185823760851331), (2.0, 0.00371037449538049), (3.0, 0.00739643017855281), (4.0, 0.0146962536265336), (5.0, 0.0290113639251324), (6.0, 0.0565394117220776), (7.0, 0.107460087626544), (8.0, 0.194732570484698), (9.0, 0.323896078728444)]),
    (3, 0.95, &[(0.0, 0.05), (1.0, 0.000184771575275477), (2.0, 0.000369479127049669), (3.0, 0.000738702251425018), (4.0, 0.00147638122234244), (5.0, 0.00294867515687057), (6.0, 0.00588104771964034), (7.0, 0.011697255662949), (8.0, 0.02313808755964), (9.0, 0.0452734993721374)]),
    (3, 0.99, &[(0.0, 0.01), (1.0, 1.23788498583429e-06), (2.0, 2.47576694727136e-06), (3.0, 4.95152179698362e-06), (4.0, 9.90299520396879e-06), (5.0, 1.98057968498477e-05), (6.0, 3.96108194825672e-05), (7.0, 7.92185422184664e-05), (8.0, 0.000158424698424952), (9.0, 0.000316799860598439)]),
    (2, 0.90, &[(0.0, 0.1), (1.0, 0.0222877862243402), (2.0, 0.0438483397309399), (3.0, 0.0848903436383006), (4.0, 0.159322945571117), (5.0, 0.28220050257829), (6.0, 0.45210317854623), (7.0, 0.623109853744309), (8.0, 0.724105385865313), (9.0, 0.748748809609942)]),
    (2, 0.95, &[(0.0, 0.05), (1.0, 0.0049876438573827), (2.0, 0.0099384045007459), (3.0, 0.0197304756251545), (4.0, 0.0388850673414838), (5.0, 0.0755399195312312), (6.0, 0.142711059687266), (7.0, 0.255868279100658), (8.0, 0.418461487984724), (9.0, 0.594025705807234)]),
    (2, 0.99, &[(0.0, 0.01), (1.0, 0.000181967097630581), (2.0, 0.000363884638516008), (3.0, 0.000727571109935186), (4.0, 0.00145435003028003), (5.0, 0.00290553512820594), (6.0, 0.00579844106529975), (7.0, 0.011546608561095), (8.0, 0.0228940507650406), (9.0, 0.0450065818280045)]),
    (1, 0.90, &[(0.0, 0.1), (1.0, 0.137081604782396), (2.0, 0.239196693096111), (3.0, 0.372930070758353), (4.0, 0.494636146932333), (5.0, 0.56594303303138), (6.0, 0.619860798839442), (7.0, 0.682283683835193), (8.0, 0.731658002914161), (9.0, 0.748654284571569)]),
    (1, 0.95, &[(0.0, 0.05), (1.0, 0.0676973725041047), (2.0, 0.126541654326247), (3.0, 0.222222135365239), (4.0, 0.34973354721808), (5.0, 0.467374624400012), (6.0, 0.530105160419878), (7.0, 0.565554607176542), (8.0, 0.613999083471674), (9.0, 0.676015009132391)]),
    (1, 0.99, &[(0.0, 0.01), (1.0, 0.0133771752563277), (2.0, 0.0263988506821023), (3.0, 0.051413365011257), (4.0, 0.0975769068472556), (5.0, 0.17625107397885), (6.0, 0.290877515093887), (7.0, 0.41419540965999), (8.0, 0.489974515307957), (9.0, 0.510774573190568)]),
];

/// Burst b: `(b, F0, [(swap step, A_eq)])`. Step 0 is the raw Werner pair.
pub const BURST_SWAP_ASYMMETRY: [(u32, f64, &[(f64, f64)]); 9] = [
    (2, 0.90, &[(0.0, 1.0), (1.0, 1.85284720355938), (2.0, 1.83435111706122), (3.0, 1.79852738476315), (4.0, 1.73133214575608), (5.0, 1.61310777383526), (6.0, 1.43001452520561), (7.0, 1.20987867917296), (8.0, 1.04872556788283), (9.0, 1.00248844037061)]),
    (2, 0.95, &[(0.0, 1.0), (1.0, 1.92993166094023), (2.0, 1.92536459626037), (3.0, 1.91629689420144), (4.0, 1.8984242365249), (5.0, 1.86370662343241), (6.0, 1.79820244278125), (7.0, 1.68157835197428), (8.0, 1.49654852082079), (9.0, 1.26270922763601)]),
    (2, 0.99, &[(0.0, 1.0), (1.0, 1.98653274888247), (2.0, 1.9863538224873), (3.0, 1.98599606682918), (4.0, 1.98528094387811), (5.0, 1.98385225012822), (6.0, 1.98100106078438), (7.0, 1.97532339132121), (8.0, 1.96406622569427), (9.0, 1.94193933586019)]),
    (1, 0.90, &[(0.0, 1.0), (1.0, 25.1428571428571), (2.0, 21.9227202243055), (3.0, 17.0294217670426), (4.0, 11.1346599965638), (5.0, 6.12611865112117), (6.0, 3.17032337133393), (7.0, 1.74297723118494), (8.0, 1.15835409832667), (9.0, 1.01082398745473)]),
    (1, 0.95, &[(0.0, 1.0), (1.0, 55.0689655172413), (2.0, 51.4642251166656), (3.0, 45.1680354603), (4.0, 35.4696245937488), (5.0, 23.5129709451842), (6.0, 13.0189135971756), (7.0, 6.62014317446234), (8.0, 3.38599990012421), (9.0, 1.84066684122347)]),
    (1, 0.99, &[(0.0, 1.0), (1.0, 295.013422818792), (2.0, 291.09324267075), (3.0, 283.459868041769), (4.0, 268.983314126738), (5.0, 242.91205218309), (6.0, 200.38767993082), (7.0, 142.510487278469), (8.0, 83.9674984657611), (9.0, 43.3251295670992)]),
    (3, 0.90, &[(0.0, 1.0), (1.0, 13.4892263059633), (2.0, 13.4675114742493), (3.0, 13.4242222981785), (4.0, 13.3382027368145), (5.0, 13.1683737503073), (6.0, 12.8373599206608), (7.0, 12.2083966631341), (8.0, 11.0715152587842), (9.0, 9.20468112009665)]),
    (3, 0.95, &[(0.0, 1.0), (1.0, 28.4975532536141), (2.0, 28.4926390237007), (3.0, 28.4828139574781), (4.0, 28.4631773912594), (5.0, 28.4239584582688), (6.0, 28.3457368674891), (7.0, 28.1901546232927), (8.0, 27.8824008508025), (9.0, 27.280276223123)]),
    (3, 0.99, &[(0.0, 1.0), (1.0, 148.499909388871), (2.0, 148.499728014154), (3.0, 148.499365265607), (4.0, 148.498639772057), (5.0, 148.497188799135), (6.0, 148.494286910003), (7.0, 148.48848335858), (8.0, 148.476877163029), (9.0, 148.453668400617)]),
];

/// Logical error against ρ₀ after three purification steps and five swaps.
pub const BURST3_FIVE_SWAP_CODES: [(&str, &[(f64, f64)]); 7] = [
    ("Uncoded", &[(0.01, 1.98057968498477e-05), (0.02, 0.000165526404768647), (0.03, 0.000583670718527299), (0.04, 0.00144540084645658), (0.05, 0.00294867515687057), (0.06, 0.0053198745319722), (0.07, 0.00881458950240045), (0.08, 0.0137171586958108), (0.09, 0.0203384587762411), (0.1, 0.0290113639251324), (0.125, 0.0619535829611906), (0.14, 0.0911205282923232), (0.175, 0.191711630930667), (0.2, 0.290738968381801), (0.3, 0.6844209678045), (0.4, 0.749885279633946)]),
    ("[[3,1]](0,1)", &[(0.01, 7.90760139479652e-07), (0.02, 1.32342480873016e-05), (0.03, 7.03238368038317e-05), (0.04, 0.000234109656509274), (0.05, 0.000604125488353646), (0.06, 0.00132849757906905), (0.07, 0.00261803157190377), (0.08, 0.00476320204947722), (0.09, 0.00815327547952238), (0.1, 0.0132956791993563), (0.125, 0.0383763631807568), (0.14, 0.0662689557152161), (0.175, 0.190116427937357), (0.2, 0.33686265796504), (0.3, 0.882168808743383), (0.4, 0.937414120362813)]),
    ("[[5,1]](0,2)", &[(0.01, 1.31602375497142e-06), (0.02, 2.19272083318289e-05), (0.03, 0.000115635061244235), (0.04, 0.000380814666492979), (0.05, 0.000969027564760583), (0.06, 0.00209480624452496), (0.07, 0.00404674631737012), (0.08, 0.00720010678553729), (0.09, 0.0120311300066298), (0.1, 0.0191330467480317), (0.125, 0.0519600675843743), (0.14, 0.0870198305410832), (0.175, 0.238971933921826), (0.2, 0.416653922373957), (0.3, 0.95624389194894), (0.4, 0.98433922129623)]),
    ("[[5,1]](1,0)", &[(0.01, 3.9225407366672e-09), (0.02, 2.73899212865913e-07), (0.03, 3.40274001742191e-06), (0.04, 2.08315073595422e-05), (0.05, 8.64352288353354e-05), (0.06, 0.000280011485267684), (0.07, 0.000763362879326435), (0.08, 0.00183051301650328), (0.09, 0.00397082051318931), (0.1, 0.00793878236816348), (0.125, 0.0338439332320628), (0.14, 0.0689070795428393), (0.175, 0.245838870565141), (0.2, 0.452641260046911), (0.3, 0.962928929583575), (0.4, 0.984348095959479)]),
    ("[[9,1]](1,1)", &[(0.01, 3.14681614099754e-12), (0.02, 1.0722409626851e-09), (0.03, 3.58363113628357e-08), (0.04, 4.5877031906727e-07), (0.05, 3.45014197811189e-06), (0.06, 1.84381776024978e-05), (0.07, 7.74676187376144e-05), (0.08, 0.000271606219446108), (0.09, 0.000825161087625204), (0.1, 0.00222702577963096), (0.125, 0.0175176454379263), (0.14, 0.047308510890435), (0.175, 0.258785432366712), (0.2, 0.537279323257566), (0.3, 0.995859281125221), (0.4, 0.999203831617873)]),
    ("[[13,1]](1,2)", &[(0.01, 5.4044546615728e-12), (0.02, 1.50060974757338e-09), (0.03, 4.17963866850002e-08), (0.04, 4.55326535919731e-07), (0.05, 2.97823234840511e-06), (0.06, 1.41894758676209e-05), (0.07, 5.46964318519638e-05), (0.08, 0.000181756074002171), (0.09, 0.000541763447162613), (0.1, 0.00148344723925486), (0.125, 0.0135056485814576), (0.14, 0.0412056821734714), (0.175, 0.282369435358567), (0.2, 0.613323448938118), (0.3, 0.999570111869071), (0.4, 0.999963572077848)]),
    ("[[11,1]](2,0)", &[(0.01, 1.28241861574452e-12), (0.02, 7.47574446791077e-10), (0.03, 3.2693888152302e-08), (0.04, 4.93948184243642e-07), (0.05, 4.15601067305094e-06), (0.06, 2.40608554517019e-05), (0.07, 0.000107171967763997), (0.08, 0.000392134973783764), (0.09, 0.0012280845108642), (0.1, 0.00338190897661006), (0.125, 0.0269364471970466), (0.14, 0.0715952446494889), (0.175, 0.355085415103675), (0.2, 0.662956573548464), (0.3, 0.999123350210689), (0.4, 0.999873388347652)]),
];
