"""Reference tables of m*lambda_i and m*phi_i rendered to four decimals."""

TABLES = {
    9: (
        ("0.0000", "0.0000"),
        ("9.0000", "9.0000"),
        ("14.2647", "14.5623"),
        ("18.0000", "18.0000"),
        ("20.8974", "21.4377"),
        ("23.2647", "23.5623"),
        ("25.2662", "25.6869"),
        ("27.0000", "27.0000"),
        ("28.5293", "29.1246"),
        ("29.8974", "30.4377"),
        ("31.1349", "31.7508"),
        ("32.2647", "32.5623"),
        ("33.3040", "33.8754"),
        ("34.2662", "34.6869"),
        ("35.1620", "35.4984"),
        ("36.0000", "36.0000"),
        ("36.7872", "37.3131"),
        ("37.5293", "38.1246"),
        ("38.2313", "38.9361"),
        ("38.8974", "39.4377"),
        ("39.5309", "40.2492"),
        ("40.1349", "40.7508"),
        ("40.7121", "41.2523"),
        ("41.2647", "41.5623"),
        ("41.7947", "42.3738"),
        ("42.3040", "42.8754"),
        ("42.7940", "43.3769"),
        ("43.2662", "43.6869"),
        ("43.7218", "44.1885"),
        ("44.1620", "44.4984"),
        ("44.5878", "44.8084"),
        ("45.0000", "45.0000"),
        ("45.3995", "45.8115"),
        ("45.7872", "46.3131"),
        ("46.1635", "46.8146"),
        ("46.5293", "47.1246"),
        ("46.8851", "47.6262"),
        ("47.2313", "47.9361"),
        ("47.5686", "48.2461"),
        ("47.8974", "48.4377"),
        ("48.2180", "48.9392"),
        ("48.5309", "49.2492"),
        ("48.8364", "49.5592"),
        ("49.1349", "49.7508"),
        ("49.4267", "50.0608"),
        ("49.7121", "50.2523"),
        ("49.9913", "50.4439"),
        ("50.2647", "50.5623"),
        ("50.5324", "51.0639"),
        ("50.7947", "51.3738"),
        ("51.0518", "51.6838"),
    ),
    11: (
        ("0.0000", "0.0000"),
        ("11.0000", "11.0000"),
        ("17.4346", "17.7984"),
        ("22.0000", "22.0000"),
        ("25.5412", "26.2016"),
        ("28.4346", "28.7984"),
        ("30.8809", "31.3951"),
        ("33.0000", "33.0000"),
        ("34.8692", "35.5967"),
        ("36.5412", "37.2016"),
        ("38.0537", "38.8065"),
        ("39.4346", "39.7984"),
        ("40.7048", "41.4033"),
        ("41.8809", "42.3951"),
        ("42.9758", "43.3870"),
        ("44.0000", "44.0000"),
        ("44.9621", "45.6049"),
        ("45.8692", "46.5967"),
        ("46.7272", "47.5886"),
        ("47.5412", "48.2016"),
        ("48.3155", "49.1935"),
        ("49.0537", "49.8065"),
        ("49.7592", "50.4195"),
        ("50.4346", "50.7984"),
        ("51.0824", "51.7902"),
        ("51.7048", "52.4033"),
        ("52.3038", "53.0163"),
        ("52.8809", "53.3951"),
        ("53.4378", "54.0081"),
        ("53.9758", "54.3870"),
        ("54.4962", "54.7659"),
        ("55.0000", "55.0000"),
        ("55.4883", "55.9919"),
        ("55.9621", "56.6049"),
        ("56.4221", "57.2179"),
        ("56.8692", "57.5967"),
        ("57.3040", "58.2098"),
        ("57.7272", "58.5886"),
        ("58.1394", "58.9675"),
        ("58.5412", "59.2016"),
        ("58.9331", "59.8146"),
        ("59.3155", "60.1935"),
        ("59.6889", "60.5724"),
        ("60.0537", "60.8065"),
        ("60.4104", "61.1854"),
        ("60.7592", "61.4195"),
        ("61.1005", "61.6537"),
        ("61.4346", "61.7984"),
        ("61.7618", "62.4114"),
        ("62.0824", "62.7902"),
        ("62.3967", "63.1691"),
    ),
    12: (
        ("0.0000", "0.0000"),
        ("12.0000", "12.0000"),
        ("19.0196", "19.4164"),
        ("24.0000", "24.0000"),
        ("27.8631", "28.5836"),
        ("31.0196", "31.4164"),
        ("33.6883", "34.2492"),
        ("36.0000", "36.0000"),
        ("38.0391", "38.8328"),
        ("39.8631", "40.5836"),
        ("41.5132", "42.3344"),
        ("43.0196", "43.4164"),
        ("44.4053", "45.1672"),
        ("45.6883", "46.2492"),
        ("46.8827", "47.3313"),
        ("48.0000", "48.0000"),
        ("49.0496", "49.7508"),
        ("50.0391", "50.8328"),
        ("50.9751", "51.9149"),
        ("51.8631", "52.5836"),
        ("52.7078", "53.6656"),
        ("53.5132", "54.3344"),
        ("54.2827", "55.0031"),
        ("55.0196", "55.4164"),
        ("55.7263", "56.4984"),
        ("56.4053", "57.1672"),
        ("57.0587", "57.8359"),
        ("57.6883", "58.2492"),
        ("58.2958", "58.9180"),
        ("58.8827", "59.3313"),
        ("59.4504", "59.7446"),
        ("60.0000", "60.0000"),
        ("60.5327", "61.0820"),
        ("61.0496", "61.7508"),
        ("61.5514", "62.4195"),
        ("62.0391", "62.8328"),
        ("62.5134", "63.5016"),
        ("62.9751", "63.9149"),
        ("63.4248", "64.3282"),
        ("63.8631", "64.5836"),
        ("64.2906", "65.2523"),
        ("64.7078", "65.6656"),
        ("65.1152", "66.0789"),
        ("65.5132", "66.3344"),
        ("65.9022", "66.7477"),
        ("66.2827", "67.0031"),
        ("66.6551", "67.2585"),
        ("67.0196", "67.4164"),
        ("67.3765", "68.0851"),
        ("67.7263", "68.4984"),
        ("68.0691", "68.9117"),
    ),
    13: (
        ("0.0000", "0.0000"),
        ("13.0000", "13.0000"),
        ("20.6045", "21.0344"),
        ("26.0000", "26.0000"),
        ("30.1851", "30.9656"),
        ("33.6045", "34.0344"),
        ("36.4956", "37.1033"),
        ("39.0000", "39.0000"),
        ("41.2090", "42.0689"),
        ("43.1851", "43.9656"),
        ("44.9726", "45.8622"),
        ("46.6045", "47.0344"),
        ("48.1057", "48.9311"),
        ("49.4956", "50.1033"),
        ("50.7896", "51.2755"),
        ("52.0000", "52.0000"),
        ("53.1370", "53.8967"),
        ("54.2090", "55.0689"),
        ("55.2231", "56.2411"),
        ("56.1851", "56.9656"),
        ("57.1001", "58.1378"),
        ("57.9726", "58.8622"),
        ("58.8063", "59.5867"),
        ("59.6045", "60.0344"),
        ("60.3701", "61.2067"),
        ("61.1057", "61.9311"),
        ("61.8135", "62.6556"),
        ("62.4956", "63.1033"),
        ("63.1538", "63.8278"),
        ("63.7896", "64.2755"),
        ("64.4046", "64.7233"),
        ("65.0000", "65.0000"),
        ("65.5771", "66.1722"),
        ("66.1370", "66.8967"),
        ("66.6807", "67.6211"),
        ("67.2090", "68.0689"),
        ("67.7229", "68.7933"),
        ("68.2231", "69.2411"),
        ("68.7102", "69.6888"),
        ("69.1851", "69.9656"),
        ("69.6482", "70.6900"),
        ("70.1001", "71.1378"),
        ("70.5414", "71.5855"),
        ("70.9726", "71.8622"),
        ("71.3941", "72.3100"),
        ("71.8063", "72.5867"),
        ("72.2097", "72.8634"),
        ("72.6045", "73.0344"),
        ("72.9912", "73.7589"),
        ("73.3701", "74.2067"),
        ("73.7415", "74.6544"),
    ),
    18: (
        ("0.0000", "0.0000"),
        ("18.0000", "18.0000"),
        ("28.5293", "29.1246"),
        ("36.0000", "36.0000"),
        ("41.7947", "42.8754"),
        ("46.5293", "47.1246"),
        ("50.5324", "51.3738"),
        ("54.0000", "54.0000"),
        ("57.0587", "58.2492"),
        ("59.7947", "60.8754"),
        ("62.2698", "63.5016"),
        ("64.5293", "65.1246"),
        ("66.6079", "67.7508"),
        ("68.5324", "69.3738"),
        ("70.3240", "70.9969"),
        ("72.0000", "72.0000"),
        ("73.5743", "74.6262"),
        ("75.0587", "76.2492"),
        ("76.4627", "77.8723"),
        ("77.7947", "78.8754"),
        ("79.0617", "80.4984"),
        ("80.2698", "81.5016"),
        ("81.4241", "82.5047"),
        ("82.5293", "83.1246"),
        ("83.5894", "84.7477"),
        ("84.6079", "85.7508"),
        ("85.5880", "86.7539"),
        ("86.5324", "87.3738"),
        ("87.4437", "88.3769"),
        ("88.3240", "88.9969"),
        ("89.1755", "89.6168"),
        ("90.0000", "90.0000"),
        ("90.7991", "91.6231"),
        ("91.5743", "92.6262"),
        ("92.3271", "93.6293"),
        ("93.0587", "94.2492"),
        ("93.7702", "95.2523"),
        ("94.4627", "95.8723"),
        ("95.1372", "96.4922"),
        ("95.7947", "96.8754"),
        ("96.4359", "97.8785"),
        ("97.0617", "98.4984"),
        ("97.6728", "99.1184"),
        ("98.2698", "99.5016"),
        ("98.8534", "100.1215"),
        ("99.4241", "100.5047"),
        ("99.9826", "100.8878"),
        ("100.5293", "101.1246"),
        ("101.0648", "102.1277"),
        ("101.5894", "102.7477"),
        ("102.1037", "103.3676"),
    ),
}
